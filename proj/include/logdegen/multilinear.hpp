#pragma once
// Comultiplication and multiplication on exterior/symmetric/divided powers,
// the induced functors on maps, and the derivation identities tying them
// together. Everything is a concrete integer matrix in the canonical bases of
// power_basis.hpp; tensor products use the Kronecker convention of kron().

#include "logdegen/power_basis.hpp"

#include <string>
#include <vector>

namespace logdegen {
namespace multilinear {

struct FreeModule {
    std::size_t rank = 0;
    std::vector<std::string> basis_labels;
};
FreeModule make_free_module(std::size_t rank);
FreeModule make_free_module(std::size_t rank, std::vector<std::string> labels);

// X (x) Y -> Y (x) X permutation matrix (dims = dim X, dim Y)
IntMatrix swap_factors(std::size_t dim_x, std::size_t dim_y);

// P^{i+j} -> P^i (x) P^j; shuffle signs for wedge, binomial coefficients for
// sym, all-ones for divided powers
IntMatrix comult_eta_split(PowerKind kind, std::size_t rank, std::size_t i, std::size_t j);
// the degree-one comultiplication P^q -> E (x) P^{q-1} (module factor first)
IntMatrix comult_eta(PowerKind kind, const FreeModule& E, std::size_t q);

// P^i (x) P^j -> P^{i+j}
IntMatrix mult_mu(PowerKind kind, const FreeModule& E, std::size_t i, std::size_t j);
IntMatrix mult_mu_split(PowerKind kind, std::size_t rank, std::size_t i, std::size_t j);

// P^q applied to a map f: minors for wedge, polynomial expansion for sym,
// divided-power expansion for divided
IntMatrix power_functor(PowerKind kind, const IntMatrix& f, std::size_t q);

// alpha_q = (alpha (x) id) o eta : P^q(E) -> F (x) P^{q-1}(E)
IntMatrix alpha_power(PowerKind kind, const IntMatrix& alpha, std::size_t q);

// the derivation square: alpha_{i+j} o mu equals the sum of the two
// transposed-factor paths, with t_i = (-1)^i * swap for wedge and +swap else
bool derivation_identity_check(PowerKind kind, const IntMatrix& alpha, std::size_t i,
                               std::size_t j);
// q * alpha_q == tau_F o (alpha (x) id, id (x) alpha_{q-1}) o eta, q >= 2
bool derivation_recursion_check(PowerKind kind, const IntMatrix& alpha, std::size_t q);

} // namespace multilinear
} // namespace logdegen
