#pragma once
// Cohomology of integer cochain complexes, with enough structure to push
// maps of complexes through: an adapted basis of the cycle lattice in which
// the boundary lattice is diagonal, the order of each adapted generator
// (0 = infinite), and cycle representatives of the free generators.
//
// The adapted basis is a deterministic function of the cycle lattice and the
// boundary lattice (both canonicalized before the diagonalization step), so
// complexes with equal cycle/boundary lattices in a degree produce identical
// HomologyClassSpace data. Shifted complexes, for instance, reuse the same
// bases, which keeps induced maps composable across shifts.

#include "logdegen/complex.hpp"

#include <optional>

namespace logdegen {
namespace complexes {

struct HomologyClassSpace {
    int degree = 0;
    zlin::AbelianGroupInvariants invariants;
    IntMatrix cycle_basis;  // ambient x z, HNF basis of ker d^q
    IntMatrix adapted;      // ambient x z, basis of ker d^q adapted to boundaries
    IntMatrix to_adapted;   // z x z: adapted-coords of a cycle v = to_adapted * solve(cycle_basis, v)
    std::vector<Int> orders; // per adapted column: 0 free, 1 trivial, d>1 torsion of order d
    IntMatrix cycle_lifts;  // ambient x free_rank: adapted columns of infinite order

    std::size_t ambient() const { return cycle_basis.rows; }
    std::size_t cycle_rank() const { return cycle_basis.cols; }
};

HomologyClassSpace homology(const Complex& K, int q);

// Adapted coordinates of cycle columns; nullopt if some column is not a cycle
// (not in the span of cycle_basis).
std::optional<IntMatrix> class_coords(const HomologyClassSpace& H, const IntMatrix& cycles);
bool class_is_zero(const HomologyClassSpace& H, const IntMatrix& cycle);
// Coordinates in the free quotient (adapted coordinates restricted to the
// infinite-order positions); throws if a column is not a cycle.
IntMatrix free_coords(const HomologyClassSpace& H, const IntMatrix& cycles);

// Matrix of the induced map on free parts (torsion quotiented away):
// columns = images of the source's free generators, written in free
// coordinates of the target. f must be a chain map; q is the degree.
IntMatrix induced_map_free(const ComplexMap& f, int q,
                           const HomologyClassSpace& hs, const HomologyClassSpace& ht);

// --- finitely presented abelian groups: Z^ambient / column span ------------

struct PresentedGroup {
    std::size_t ambient = 0;
    IntMatrix relations; // ambient x k (k may be 0)
};

PresentedGroup presented_zero();
zlin::AbelianGroupInvariants presented_invariants(const PresentedGroup& G);
// Full homology group at degree q as a presented group in adapted coordinates.
PresentedGroup homology_presented(const HomologyClassSpace& H);
// Lattice {x : F x in span(rel_tgt)} as an HNF column basis.
IntMatrix preimage_lattice(const IntMatrix& F, const IntMatrix& rel_tgt);
// Maps of presented groups are ambient matrices carrying relations into
// relations; validity is checked by each predicate.
bool presented_map_valid(const PresentedGroup& A, const IntMatrix& F, const PresentedGroup& B);
bool presented_injective(const PresentedGroup& A, const IntMatrix& F, const PresentedGroup& B);
bool presented_surjective(const PresentedGroup& A, const IntMatrix& F, const PresentedGroup& B);
bool presented_iso(const PresentedGroup& A, const IntMatrix& F, const PresentedGroup& B);
// exact at B for A -F-> B -G-> C: im F == ker G (as subgroups of B)
bool presented_exact(const PresentedGroup& A, const IntMatrix& F,
                     const PresentedGroup& B, const IntMatrix& G, const PresentedGroup& C);

// Induced map on full homology groups in adapted coordinates (ambient matrix
// between homology_presented(hs) and homology_presented(ht)).
IntMatrix induced_map_presented(const ComplexMap& f, int q,
                                const HomologyClassSpace& hs, const HomologyClassSpace& ht);

bool is_quasi_iso(const ComplexMap& f);

} // namespace complexes
} // namespace logdegen
