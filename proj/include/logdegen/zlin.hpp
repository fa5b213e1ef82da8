#pragma once
// Exact integer linear algebra: Smith normal form with unimodular
// transforms, saturated kernel bases, cokernel invariants, Hermite-canonical
// lattice bases, and exact linear solves. This is the engine every other
// module sits on.

#include "logdegen/matrix.hpp"

#include <optional>
#include <vector>

namespace logdegen {
namespace zlin {

struct SmithForm {
    IntMatrix U; // rows x rows, unimodular
    IntMatrix D; // rows x cols, diagonal, d1 | d2 | ... , entries >= 0
    IntMatrix V; // cols x cols, unimodular
};

// U*A*V == D with the divisibility chain. Pivoting picks the entry of
// minimal absolute value to limit coefficient growth.
SmithForm smith_normal_form(const IntMatrix& A);

// Columns form a Z-basis of {x : A x = 0}; the basis is saturated
// (Z^cols / span is torsion-free) and canonicalized by column HNF.
IntMatrix kernel_basis(const IntMatrix& A);

struct AbelianGroupInvariants {
    std::size_t free_rank = 0;
    std::vector<Int> torsion; // entries >= 2, each dividing the next

    friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
};

// Invariants of Z^rows / column-span(A).
AbelianGroupInvariants cokernel_invariants(const IntMatrix& A);

// Canonical (column Hermite normal form) basis of the column lattice of A.
// Zero columns are dropped; the result's columns are a basis.
IntMatrix hnf_columns(const IntMatrix& A);

// Exact solve A X = B over Z (all columns simultaneously); nullopt if any
// column has no integral solution. Among solutions the one with zero
// coefficients on the kernel directions of the SNF change of basis.
std::optional<IntMatrix> solve(const IntMatrix& A, const IntMatrix& B);

// Rank over Q by Bareiss fraction-free elimination — an independent path
// used to cross-check SNF-derived ranks.
std::size_t rank_ff(const IntMatrix& A);

// Determinant by Bareiss elimination (exact).
Int det_bareiss(const IntMatrix& A);

// Inverse of a matrix with |det| = 1.
IntMatrix inverse_unimodular(const IntMatrix& U);

// True if the sublattice spanned by the columns of B is saturated in its
// ambient Z^rows (quotient torsion-free).
bool is_saturated_lattice(const IntMatrix& B);

// Lattice equality of column spans, via HNF.
bool same_column_lattice(const IntMatrix& A, const IntMatrix& B);

// Diagonal entries of D as a vector (length min(rows, cols)).
std::vector<Int> elementary_divisors(const IntMatrix& A);

} // namespace zlin
} // namespace logdegen
