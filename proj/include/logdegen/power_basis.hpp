#pragma once
// Canonical bases for exterior, symmetric, and divided powers of Z^n.
// Wedge bases are strictly increasing index tuples; symmetric and divided
// bases are non-decreasing tuples (multisets). Enumeration is lexicographic,
// which fixes every sign-sensitive matrix in the library.

#include "logdegen/matrix.hpp"

#include <vector>

namespace logdegen {
namespace multilinear {

enum class PowerKind { Wedge, Sym, Divided };

Int binom(std::size_t n, std::size_t k);
std::size_t power_rank(PowerKind kind, std::size_t n, std::size_t q);

struct PowerBasis {
    PowerKind kind = PowerKind::Wedge;
    std::size_t n = 0, q = 0;
    std::vector<std::vector<std::size_t>> tuples; // lex-ordered

    std::size_t size() const { return tuples.size(); }
    std::size_t index_of(const std::vector<std::size_t>& t) const;
    // exponent vector of length n (sym/divided view of a tuple)
    std::vector<std::size_t> exponents(std::size_t idx) const;
};

PowerBasis power_basis(PowerKind kind, std::size_t n, std::size_t q);

std::vector<std::size_t> tuple_from_exponents(const std::vector<std::size_t>& e);

} // namespace multilinear
} // namespace logdegen
