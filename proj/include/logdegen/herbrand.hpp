#pragma once
// Invariants/coinvariants complex of a complex automorphism: for rho acting
// on K, form C = cocone(rho - id). Its cohomology sits in short exact
// sequences  0 -> coker(lambda | H^{q-1}) -> H^q(C) -> ker(lambda | H^q) -> 0
// with lambda = rho - id; these are verified exactly (including torsion) at
// the lattice level, not just by rank counting.

#include "logdegen/complex_ops.hpp"

namespace logdegen {
namespace complexes {

Complex herbrand_complex(const ComplexWithAutomorphism& K);

struct HerbrandDegreeCheck {
    int degree = 0;
    bool injective = false;  // coker(lambda|H^{q-1}) -> H^q(C)
    bool exact = false;      // im == ker in H^q(C)
    bool surjective = false; // H^q(C) ->> ker(lambda|H^q)
    zlin::AbelianGroupInvariants middle; // invariants of H^q(C)
    bool ok() const { return injective && exact && surjective; }
};

std::vector<HerbrandDegreeCheck> herbrand_sequence_check(const ComplexWithAutomorphism& K);

// For rho == id the sequences split: H^q(C) ~ H^q(K) (+) H^{q-1}(K).
bool herbrand_identity_splitting_check(const Complex& K);

} // namespace complexes
} // namespace logdegen
