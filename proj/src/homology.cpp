#include "logdegen/homology.hpp"

#include <stdexcept>

namespace logdegen {
namespace complexes {

using zlin::cokernel_invariants;
using zlin::hnf_columns;
using zlin::kernel_basis;
using zlin::same_column_lattice;
using zlin::smith_normal_form;
using zlin::solve;

HomologyClassSpace homology(const Complex& K, int q) {
    HomologyClassSpace H;
    H.degree = q;
    const std::size_t n = K.rank(q);
    H.cycle_basis = kernel_basis(K.diff(q));
    const std::size_t z = H.cycle_basis.cols;
    // Canonicalize the boundary lattice before diagonalizing so the adapted
    // basis depends only on the pair of lattices, not on the presentation.
    IntMatrix boundaries = hnf_columns(K.diff(q - 1));
    auto M = solve(H.cycle_basis, boundaries);
    if (!M) throw std::logic_error("homology: boundaries do not lie in the cycle lattice");
    zlin::SmithForm snf = smith_normal_form(*M);
    H.adapted = mul(H.cycle_basis, zlin::inverse_unimodular(snf.U));
    H.to_adapted = snf.U;
    H.orders.assign(z, Int(0));
    const std::size_t lim = std::min(snf.D.rows, snf.D.cols);
    for (std::size_t i = 0; i < lim; ++i) H.orders[i] = snf.D.at(i, i);
    std::vector<std::size_t> free_pos;
    for (std::size_t i = 0; i < z; ++i) {
        if (H.orders[i] == 0)
            free_pos.push_back(i);
        else if (H.orders[i] > 1)
            H.invariants.torsion.push_back(H.orders[i]);
    }
    H.invariants.free_rank = free_pos.size();
    H.cycle_lifts = IntMatrix::zero(n, free_pos.size());
    for (std::size_t j = 0; j < free_pos.size(); ++j)
        for (std::size_t r = 0; r < n; ++r)
            H.cycle_lifts.at(r, j) = H.adapted.at(r, free_pos[j]);
    return H;
}

std::optional<IntMatrix> class_coords(const HomologyClassSpace& H, const IntMatrix& cycles) {
    if (cycles.rows != H.ambient()) throw std::invalid_argument("class_coords: ambient mismatch");
    auto s = solve(H.cycle_basis, cycles);
    if (!s) return std::nullopt;
    return mul(H.to_adapted, *s);
}

bool class_is_zero(const HomologyClassSpace& H, const IntMatrix& cycle) {
    auto y = class_coords(H, cycle);
    if (!y) throw std::invalid_argument("class_is_zero: not a cycle");
    for (std::size_t j = 0; j < y->cols; ++j) {
        for (std::size_t i = 0; i < H.orders.size(); ++i) {
            const Int& c = y->at(i, j);
            if (H.orders[i] == 0) {
                if (c != 0) return false;
            } else if (c % H.orders[i] != 0) {
                return false;
            }
        }
    }
    return true;
}

static IntMatrix free_part_coords(const HomologyClassSpace& H, const IntMatrix& coords) {
    IntMatrix out = IntMatrix::zero(H.invariants.free_rank, coords.cols);
    std::size_t r = 0;
    for (std::size_t i = 0; i < H.orders.size(); ++i) {
        if (H.orders[i] != 0) continue;
        for (std::size_t j = 0; j < coords.cols; ++j) out.at(r, j) = coords.at(i, j);
        ++r;
    }
    return out;
}

IntMatrix free_coords(const HomologyClassSpace& H, const IntMatrix& cycles) {
    auto y = class_coords(H, cycles);
    if (!y) throw std::invalid_argument("free_coords: not a cycle");
    return free_part_coords(H, *y);
}

IntMatrix induced_map_free(const ComplexMap& f, int q,
                           const HomologyClassSpace& hs, const HomologyClassSpace& ht) {
    IntMatrix images = mul(f.component(q), hs.cycle_lifts);
    auto y = class_coords(ht, images);
    if (!y) throw std::logic_error("induced_map_free: image of a cycle is not a cycle");
    return free_part_coords(ht, *y);
}

PresentedGroup presented_zero() { return PresentedGroup{0, IntMatrix::zero(0, 0)}; }

zlin::AbelianGroupInvariants presented_invariants(const PresentedGroup& G) {
    if (G.relations.rows != G.ambient)
        throw std::invalid_argument("presented group: relation shape mismatch");
    return cokernel_invariants(G.relations);
}

PresentedGroup homology_presented(const HomologyClassSpace& H) {
    std::size_t k = 0;
    for (const Int& d : H.orders)
        if (d != 0) ++k;
    IntMatrix rel = IntMatrix::zero(H.orders.size(), k);
    std::size_t c = 0;
    for (std::size_t i = 0; i < H.orders.size(); ++i)
        if (H.orders[i] != 0) rel.at(i, c++) = H.orders[i];
    return PresentedGroup{H.orders.size(), rel};
}

IntMatrix preimage_lattice(const IntMatrix& F, const IntMatrix& rel_tgt) {
    if (F.rows != rel_tgt.rows) throw std::invalid_argument("preimage_lattice: shape mismatch");
    IntMatrix stacked = hstack(F, rel_tgt);
    IntMatrix ker = kernel_basis(stacked);
    IntMatrix top = ker.submatrix(0, 0, F.cols, ker.cols);
    return hnf_columns(top);
}

bool presented_map_valid(const PresentedGroup& A, const IntMatrix& F, const PresentedGroup& B) {
    if (F.rows != B.ambient || F.cols != A.ambient) return false;
    IntMatrix carried = mul(F, A.relations);
    return carried.is_zero() || solve(B.relations, carried).has_value();
}

bool presented_injective(const PresentedGroup& A, const IntMatrix& F, const PresentedGroup& B) {
    if (!presented_map_valid(A, F, B)) return false;
    IntMatrix pre = preimage_lattice(F, B.relations);
    return same_column_lattice(pre, A.relations);
}

bool presented_surjective(const PresentedGroup& A, const IntMatrix& F, const PresentedGroup& B) {
    if (!presented_map_valid(A, F, B)) return false;
    IntMatrix span = hnf_columns(hstack(F, B.relations));
    return same_column_lattice(span, IntMatrix::identity(B.ambient));
}

bool presented_iso(const PresentedGroup& A, const IntMatrix& F, const PresentedGroup& B) {
    return presented_injective(A, F, B) && presented_surjective(A, F, B);
}

bool presented_exact(const PresentedGroup& A, const IntMatrix& F,
                     const PresentedGroup& B, const IntMatrix& G, const PresentedGroup& C) {
    if (!presented_map_valid(A, F, B) || !presented_map_valid(B, G, C)) return false;
    // im F == ker G inside B: compare the lattices (im F + rel_B) and G^{-1}(rel_C).
    IntMatrix image = hnf_columns(hstack(F, B.relations));
    IntMatrix kernel = preimage_lattice(G, C.relations);
    // ker G as a lattice in Z^ambient(B) already contains rel_B since G carries
    // relations into relations.
    return same_column_lattice(image, kernel);
}

IntMatrix induced_map_presented(const ComplexMap& f, int q,
                                const HomologyClassSpace& hs, const HomologyClassSpace& ht) {
    IntMatrix images = mul(f.component(q), hs.adapted);
    auto y = class_coords(ht, images);
    if (!y) throw std::logic_error("induced_map_presented: image of a cycle is not a cycle");
    return *y;
}

bool is_quasi_iso(const ComplexMap& f) {
    int a = 0, b = -1;
    bool any = false;
    auto widen = [&](const Complex& K) {
        if (K.empty()) return;
        if (!any) { a = K.lo; b = K.hi(); any = true; }
        else { a = std::min(a, K.lo); b = std::max(b, K.hi()); }
    };
    widen(f.source);
    widen(f.target);
    if (!any) return true;
    for (int q = a; q <= b + 1; ++q) {
        HomologyClassSpace hs = homology(f.source, q);
        HomologyClassSpace ht = homology(f.target, q);
        IntMatrix N = induced_map_presented(f, q, hs, ht);
        if (!presented_iso(homology_presented(hs), N, homology_presented(ht))) return false;
    }
    return true;
}

} // namespace complexes
} // namespace logdegen
