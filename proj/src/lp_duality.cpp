#include "logdegen/lp_duality.hpp"

#include <stdexcept>
#include <vector>

namespace logdegen::monoids {

namespace {

void require_row(const IntMatrix& gamma, std::size_t r, const char* who) {
    if (gamma.rows != 1 || gamma.cols != r)
        throw std::invalid_argument(std::string(who) + ": group element must be a 1 x r row");
}

} // namespace

AffineMapOnInertia make_affine_map(const Int& constant, const IntMatrix& linear) {
    if (linear.cols != 1)
        throw std::invalid_argument("affine map: character part must be a column vector");
    return AffineMapOnInertia{constant, linear};
}

AffineMapOnInertia character_lift(const IntMatrix& character) {
    return make_affine_map(Int(0), character);
}

AffineMapOnInertia inertia_action(const IntMatrix& gamma, const AffineMapOnInertia& f) {
    require_row(gamma, f.linear.rows, "inertia_action");
    // f(x + gamma) = f(x) + <gamma, linear>
    return AffineMapOnInertia{f.constant + mul(gamma, f.linear).at(0, 0), f.linear};
}

GroupRingModJSquared make_group_ring_element(const Int& aug, const IntMatrix& cls) {
    if (cls.rows != 1)
        throw std::invalid_argument("group ring element: class part must be a row vector");
    return GroupRingModJSquared{aug, cls};
}

GroupRingModJSquared group_element_class(const IntMatrix& gamma) {
    require_row(gamma, gamma.cols, "group_element_class");
    return GroupRingModJSquared{Int(1), gamma};
}

GroupRingModJSquared group_ring_translate(const IntMatrix& gamma,
                                          const GroupRingModJSquared& xi) {
    require_row(gamma, xi.cls.cols, "group_ring_translate");
    // gamma * (aug + j) = aug + aug*(gamma - 1) + j  mod J^2
    return GroupRingModJSquared{xi.aug, add(xi.cls, scalar_mul(xi.aug, gamma))};
}

Int lp_pairing(const GroupRingModJSquared& xi, const AffineMapOnInertia& f) {
    if (xi.cls.cols != f.linear.rows)
        throw std::invalid_argument("lp_pairing: rank mismatch");
    return xi.aug * f.constant + mul(xi.cls, f.linear).at(0, 0);
}

bool lp_duality_check(std::size_t r) {
    // bases: group-ring side (1,0),(0,e_i); affine side (1,0),(0,e_j)
    std::vector<GroupRingModJSquared> xs;
    xs.push_back(make_group_ring_element(Int(1), IntMatrix::zero(1, r)));
    for (std::size_t i = 0; i < r; ++i) {
        IntMatrix e = IntMatrix::zero(1, r);
        e.at(0, i) = 1;
        xs.push_back(make_group_ring_element(Int(0), e));
    }
    std::vector<AffineMapOnInertia> fs;
    fs.push_back(make_affine_map(Int(1), IntMatrix::zero(r, 1)));
    for (std::size_t j = 0; j < r; ++j) {
        IntMatrix e = IntMatrix::zero(r, 1);
        e.at(j, 0) = 1;
        fs.push_back(character_lift(e));
    }

    IntMatrix gram(r + 1, r + 1);
    for (std::size_t a = 0; a <= r; ++a)
        for (std::size_t b = 0; b <= r; ++b) gram.at(a, b) = lp_pairing(xs[a], fs[b]);
    if (!(gram == IntMatrix::identity(r + 1))) return false;

    // equivariance <gamma.xi, f> == <xi, gamma.f> over a spread of gammas,
    // including non-basis ones where both sides pick up cross terms
    std::vector<IntMatrix> gammas;
    for (std::size_t i = 0; i < r; ++i) {
        IntMatrix e = IntMatrix::zero(1, r);
        e.at(0, i) = 1;
        gammas.push_back(e);
    }
    IntMatrix mixed = IntMatrix::zero(1, r);
    for (std::size_t i = 0; i < r; ++i)
        mixed.at(0, i) = (i % 2 == 0) ? Int(static_cast<long>(i) + 2)
                                      : Int(-static_cast<long>(i) - 1);
    gammas.push_back(mixed);

    // also pair against a generic pair, not just basis vectors
    IntMatrix vrow = IntMatrix::zero(1, r);
    IntMatrix vcol = IntMatrix::zero(r, 1);
    for (std::size_t i = 0; i < r; ++i) {
        vrow.at(0, i) = Int(3 * static_cast<long>(i) - 2);
        vcol.at(i, 0) = Int(static_cast<long>(i * i) - 5);
    }
    xs.push_back(make_group_ring_element(Int(4), vrow));
    fs.push_back(make_affine_map(Int(-7), vcol));

    for (const auto& g : gammas)
        for (const auto& xi : xs)
            for (const auto& f : fs)
                if (lp_pairing(group_ring_translate(g, xi), f) !=
                    lp_pairing(xi, inertia_action(g, f)))
                    return false;

    // boundary: constant term of e_i acting on the lift of e_j is delta_ij
    IntMatrix bd(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) bd.at(i, j) = inertia_action(gammas[i], fs[j + 1]).constant;
    return bd == IntMatrix::identity(r);
}

} // namespace logdegen::monoids
