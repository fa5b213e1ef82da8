#pragma once

// Exact model of the duality between two rank-(r+1) lattices attached to a
// rank-r inertia group L:
//
//   * affine-linear maps L -> Z, i.e. pairs (constant, character), with L
//     acting by translation in the source;
//   * the group ring Z[L] modulo the square of its augmentation ideal,
//     which splits as Z (augmentation) plus L itself (classes of gamma - 1).
//
// The pairing  <(aug, cls), (constant, linear)> = aug*constant + cls.linear
// is unimodular and intertwines the translation actions on both sides.

#include <cstddef>

#include "logdegen/matrix.hpp"

namespace logdegen::monoids {

// f(x) = constant + <x, linear>; `linear` is an r x 1 column (a character).
struct AffineMapOnInertia {
    Int constant;
    IntMatrix linear;
};

AffineMapOnInertia make_affine_map(const Int& constant, const IntMatrix& linear);

// canonical lift of a character: constant part zero
AffineMapOnInertia character_lift(const IntMatrix& character);

// (gamma . f)(x) = f(x + gamma); gamma is a 1 x r row (a group element)
AffineMapOnInertia inertia_action(const IntMatrix& gamma, const AffineMapOnInertia& f);

// class of aug + (terms in the augmentation ideal) in Z[L]/J^2; `cls` is the
// image in J/J^2 = L, stored as a 1 x r row
struct GroupRingModJSquared {
    Int aug;
    IntMatrix cls;
};

GroupRingModJSquared make_group_ring_element(const Int& aug, const IntMatrix& cls);

// class of the group element gamma itself: [gamma] = 1 + (gamma - 1)
GroupRingModJSquared group_element_class(const IntMatrix& gamma);

// translation [x] -> [gamma + x]: (aug, v) -> (aug, v + aug*gamma)
GroupRingModJSquared group_ring_translate(const IntMatrix& gamma,
                                          const GroupRingModJSquared& xi);

Int lp_pairing(const GroupRingModJSquared& xi, const AffineMapOnInertia& f);

// Verifies, for inertia rank r: the Gram matrix of the pairing on the
// standard bases is the identity, the pairing intertwines the two
// translation actions, and the "constant term of gamma acting on a lifted
// character" boundary matrix is the identity.  Throws nothing; returns
// false on the first failed identity.
bool lp_duality_check(std::size_t r);

} // namespace logdegen::monoids
