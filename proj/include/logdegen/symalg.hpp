#pragma once
// Truncated symmetric algebra S^{<=n}(V) on a free module, the translation
// automorphisms rho_gamma (x_i -> x_i + gamma_i, extended multiplicatively),
// interior multiplication lambda_gamma, and the exact exp/log relation
// between them, including the identification of the degree filtration with
// the annihilator filtration of the translation action.

#include "logdegen/matrix.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace logdegen {
namespace multilinear {

struct TruncatedSymAlgebra {
    std::size_t rank = 0;        // number of variables
    std::size_t max_degree = 0;  // monomials of total degree > max_degree are dropped
    std::vector<std::vector<std::size_t>> monomials;  // exponent vectors, (degree, lex) order
    std::map<std::vector<std::size_t>, std::size_t> index;

    std::size_t size() const { return monomials.size(); }
    std::size_t index_of(const std::vector<std::size_t>& expo) const;
    // number of monomials of total degree <= m (they come first in the order)
    std::size_t degree_cutoff(std::size_t m) const;
};
TruncatedSymAlgebra make_truncated_sym_algebra(std::size_t rank, std::size_t max_degree);

// product of two coordinate vectors; `truncated` reports whether any term of
// degree > max_degree was dropped
struct TruncatedProduct {
    IntMatrix value;
    bool truncated = false;
};
TruncatedProduct multiply(const TruncatedSymAlgebra& S, const IntMatrix& x, const IntMatrix& y);

// the derivation with lambda(x_i) = gamma_i (gamma is a 1 x rank functional);
// lowers degree by one
IntMatrix interior_mult(const IntMatrix& gamma, const TruncatedSymAlgebra& S);

// the algebra automorphism substituting x_i -> x_i + gamma_i, in closed form
IntMatrix unipotent_rho(const IntMatrix& gamma, const TruncatedSymAlgebra& S);

// checks, all in exact integer arithmetic (rational identities are cleared of
// denominators):
//   - the closed form of rho_gamma agrees with the multiplicative rebuild
//   - (rho - id)^{n+1} = 0
//   - sum_k (n!/k!) lambda^k == n! rho            (rho = exp lambda)
//   - lcm(1..n) lambda == sum_k (-1)^{k+1} (lcm/k) (rho-id)^k   (lambda = log rho)
//   - for every m, span(degree <= m) is exactly the joint kernel of all
//     (m+1)-fold products of the operators rho_{e_i} - id
bool unipotent_exp_log_check(const IntMatrix& gamma, const TruncatedSymAlgebra& S);

} // namespace multilinear
} // namespace logdegen
