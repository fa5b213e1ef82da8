#include "logdegen/complex_ops.hpp"

#include <stdexcept>

namespace logdegen {
namespace complexes {

using zlin::hnf_columns;
using zlin::kernel_basis;
using zlin::same_column_lattice;
using zlin::solve;

Complex shift(const Complex& K, int k) {
    if (K.empty()) return K;
    std::vector<IntMatrix> diffs = K.diffs;
    if (k % 2 != 0)
        for (auto& d : diffs) d = neg(d);
    Complex out = make_complex(K.lo - k, K.ranks, std::move(diffs));
    for (int n : K.resolution_degrees) out.resolution_degrees.insert(n - k);
    return out;
}

ComplexMap shift_map(const ComplexMap& f, int k) {
    std::map<int, IntMatrix> comp;
    for (const auto& [n, m] : f.comp) comp.emplace(n - k, m);
    return make_complex_map(shift(f.source, k), shift(f.target, k), std::move(comp));
}

static IntMatrix block2(const IntMatrix& m00, const IntMatrix& m01,
                        const IntMatrix& m10, const IntMatrix& m11) {
    return vstack(hstack(m00, m01), hstack(m10, m11));
}

ConeResult cone(const ComplexMap& u) {
    const Complex& A = u.source;
    const Complex& B = u.target;
    ConeResult out;
    if (A.empty() && B.empty()) {
        out.cx = zero_complex();
        out.incl = make_complex_map(B, out.cx, {});
        out.proj = make_complex_map(out.cx, shift(A, 1), {});
        return out;
    }
    int lo = A.empty() ? B.lo : (B.empty() ? A.lo - 1 : std::min(B.lo, A.lo - 1));
    int hi = A.empty() ? B.hi() : (B.empty() ? A.hi() - 1 : std::max(B.hi(), A.hi() - 1));
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> diffs;
    for (int n = lo; n <= hi; ++n) ranks.push_back(B.rank(n) + A.rank(n + 1));
    for (int n = lo; n < hi; ++n)
        diffs.push_back(block2(B.diff(n), u.component(n + 1),
                               IntMatrix::zero(A.rank(n + 2), B.rank(n)), neg(A.diff(n + 1))));
    out.cx = make_complex(lo, std::move(ranks), std::move(diffs));
    std::map<int, IntMatrix> icomp, pcomp;
    for (int n = lo; n <= hi; ++n) {
        icomp.emplace(n, vstack(IntMatrix::identity(B.rank(n)),
                                IntMatrix::zero(A.rank(n + 1), B.rank(n))));
        pcomp.emplace(n, hstack(IntMatrix::zero(A.rank(n + 1), B.rank(n)),
                                IntMatrix::identity(A.rank(n + 1))));
    }
    out.incl = make_complex_map(B, out.cx, std::move(icomp));
    out.proj = make_complex_map(out.cx, shift(A, 1), std::move(pcomp));
    return out;
}

CoconeResult cocone_with_maps(const ComplexMap& u) {
    const Complex& A = u.source;
    const Complex& B = u.target;
    CoconeResult out;
    if (A.empty() && B.empty()) {
        out.cx = zero_complex();
        out.incl = make_complex_map(shift(B, -1), out.cx, {});
        out.proj = make_complex_map(out.cx, A, {});
        return out;
    }
    int lo = A.empty() ? B.lo + 1 : (B.empty() ? A.lo : std::min(A.lo, B.lo + 1));
    int hi = A.empty() ? B.hi() + 1 : (B.empty() ? A.hi() : std::max(A.hi(), B.hi() + 1));
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> diffs;
    for (int n = lo; n <= hi; ++n) ranks.push_back(A.rank(n) + B.rank(n - 1));
    for (int n = lo; n < hi; ++n)
        diffs.push_back(block2(A.diff(n), IntMatrix::zero(A.rank(n + 1), B.rank(n - 1)),
                               neg(u.component(n)), neg(B.diff(n - 1))));
    out.cx = make_complex(lo, std::move(ranks), std::move(diffs));
    std::map<int, IntMatrix> icomp, pcomp;
    for (int n = lo; n <= hi; ++n) {
        icomp.emplace(n, vstack(IntMatrix::zero(A.rank(n), B.rank(n - 1)),
                                IntMatrix::identity(B.rank(n - 1))));
        pcomp.emplace(n, hstack(IntMatrix::identity(A.rank(n)),
                                IntMatrix::zero(A.rank(n), B.rank(n - 1))));
    }
    out.incl = make_complex_map(shift(B, -1), out.cx, std::move(icomp));
    out.proj = make_complex_map(out.cx, A, std::move(pcomp));
    return out;
}

Complex cocone(const ComplexMap& u) { return cocone_with_maps(u).cx; }

// tau_{<= t}: replace the term in degree t by the cycle lattice of d^t.
static Complex top_truncate(const Complex& K, int t) {
    if (K.empty() || t >= K.hi()) return K;
    if (t < K.lo) return zero_complex();
    IntMatrix Z = kernel_basis(K.diff(t));
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> diffs;
    for (int n = K.lo; n < t; ++n) ranks.push_back(K.rank(n));
    ranks.push_back(Z.cols);
    for (int n = K.lo; n + 1 < t; ++n) diffs.push_back(K.diff(n));
    if (t > K.lo) {
        auto M = solve(Z, K.diff(t - 1));
        if (!M) throw std::logic_error("truncate: differential image escapes the cycle lattice");
        diffs.push_back(*M);
    }
    Complex out = make_complex(K.lo, std::move(ranks), std::move(diffs));
    for (int n : K.resolution_degrees)
        if (n < t) out.resolution_degrees.insert(n);
    return out;
}

// tau_{>= a}: replace degrees < a by a rank-(image of d^{a-1}) term in degree
// a-1 whose differential is the lattice inclusion; the quotient H^{a-1} term
// of the classical truncation can have torsion, so it is kept as this
// two-term free resolution and flagged in resolution_degrees.
static Complex bottom_truncate(const Complex& K, int a) {
    if (K.empty() || a <= K.lo) return K;
    if (a > K.hi()) return zero_complex();
    IntMatrix img = hnf_columns(K.diff(a - 1));
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> diffs;
    ranks.push_back(img.cols);
    diffs.push_back(img);
    for (int n = a; n <= K.hi(); ++n) ranks.push_back(K.rank(n));
    for (int n = a; n < K.hi(); ++n) diffs.push_back(K.diff(n));
    Complex out = make_complex(a - 1, std::move(ranks), std::move(diffs));
    if (img.cols > 0) out.resolution_degrees.insert(a - 1);
    for (int n : K.resolution_degrees)
        if (n >= a) out.resolution_degrees.insert(n);
    return out;
}

Complex truncate(const Complex& K, const TruncationSpec& spec) {
    switch (spec.kind) {
    case TruncationSpec::Kind::Below:
        return trim(top_truncate(K, spec.q));
    case TruncationSpec::Kind::Above:
        return trim(bottom_truncate(K, spec.q));
    case TruncationSpec::Kind::Window:
        if (spec.a >= spec.b) return zero_complex();
        return trim(bottom_truncate(top_truncate(K, spec.b - 1), spec.a));
    }
    throw std::logic_error("truncate: bad spec");
}

TruncationTriangle truncation_triangle(const Complex& K, int a, int b, int c) {
    if (!(a < b && b < c)) throw std::invalid_argument("truncation_triangle: need a < b < c");
    TruncationTriangle T;
    Complex topA = top_truncate(K, b - 1);
    Complex topB = top_truncate(K, c - 1);
    Complex A_ = bottom_truncate(topA, a);
    Complex B_ = bottom_truncate(topB, a);
    Complex C_ = bottom_truncate(topB, b);

    const bool trimmed_b = !K.empty() && b - 1 >= K.lo && b - 1 < K.hi();
    IntMatrix Zb = trimmed_b ? kernel_basis(K.diff(b - 1)) : IntMatrix::zero(0, 0);

    // sub -> total
    std::map<int, IntMatrix> icomp;
    if (!A_.empty()) {
        for (int n = A_.lo; n <= A_.hi(); ++n) {
            if (A_.rank(n) == 0) continue;
            if (A_.resolution_degrees.count(n) && n == a - 1) {
                // both bottoms resolve the image lattice of d^{a-1}; translate
                // through the cycle basis when the sub-window is a single degree
                IntMatrix lifted = (trimmed_b && a == b - 1) ? mul(Zb, A_.diff(a - 1))
                                                             : A_.diff(a - 1);
                auto s = solve(B_.diff(a - 1), lifted);
                if (!s) throw std::logic_error("truncation_triangle: bottom lattices incompatible");
                icomp.emplace(n, *s);
            } else if (n == b - 1 && trimmed_b) {
                icomp.emplace(n, Zb);
            } else {
                icomp.emplace(n, IntMatrix::identity(A_.rank(n)));
            }
        }
    }
    T.incl = make_complex_map(A_, B_, std::move(icomp));

    // total -> quotient
    std::map<int, IntMatrix> pcomp;
    if (!C_.empty()) {
        for (int n = C_.lo; n <= C_.hi(); ++n) {
            if (C_.rank(n) == 0 || B_.rank(n) == 0) continue;
            if (C_.resolution_degrees.count(n) && n == b - 1) {
                auto s = solve(C_.diff(b - 1), topB.diff(b - 1));
                if (!s) throw std::logic_error("truncation_triangle: coimage projection failed");
                pcomp.emplace(n, *s);
            } else {
                pcomp.emplace(n, IntMatrix::identity(C_.rank(n)));
            }
        }
    }
    T.proj = make_complex_map(B_, C_, std::move(pcomp));

    T.sub = A_;
    T.total = B_;
    T.quotient = C_;

    int qlo = 0, qhi = -1;
    if (!B_.empty()) { qlo = B_.lo - 1; qhi = B_.hi() + 1; }
    for (int q = qlo; q <= qhi; ++q)
        T.connecting.emplace(q, snake_connecting(T.incl, T.proj, q));
    return T;
}

IntMatrix snake_connecting(const ComplexMap& u, const ComplexMap& pi, int q) {
    if (!(u.target == pi.source))
        throw std::invalid_argument("snake_connecting: maps are not composable");
    const Complex& A = u.source;
    const Complex& B = u.target;
    const Complex& C = pi.target;
    int lo = 0, hi = -1;
    bool any = false;
    for (const Complex* K : {&A, &B, &C}) {
        if (K->empty()) continue;
        if (!any) { lo = K->lo; hi = K->hi(); any = true; }
        else { lo = std::min(lo, K->lo); hi = std::max(hi, K->hi()); }
    }
    for (int n = lo; any && n <= hi; ++n) {
        IntMatrix un = u.component(n);
        IntMatrix pn = pi.component(n);
        if (!mul(pn, un).is_zero())
            throw std::invalid_argument("snake_connecting: pi o u != 0");
        if (A.rank(n) + C.rank(n) != B.rank(n))
            throw std::invalid_argument("snake_connecting: ranks are not additive");
        if (zlin::rank_ff(un) != A.rank(n))
            throw std::invalid_argument("snake_connecting: u is not injective");
        auto ci = zlin::cokernel_invariants(un);
        if (!ci.torsion.empty())
            throw std::invalid_argument("snake_connecting: image of u is not saturated");
        auto cp = zlin::cokernel_invariants(pn);
        if (cp.free_rank != 0 || !cp.torsion.empty())
            throw std::invalid_argument("snake_connecting: pi is not surjective");
        if (!same_column_lattice(kernel_basis(pn), un))
            throw std::invalid_argument("snake_connecting: im u != ker pi");
    }
    HomologyClassSpace HC = homology(C, q);
    HomologyClassSpace HA = homology(A, q + 1);
    auto lift = solve(pi.component(q), HC.cycle_lifts);
    if (!lift) throw std::logic_error("snake_connecting: lift through pi failed");
    IntMatrix w = mul(B.diff(q), *lift);
    auto back = solve(u.component(q + 1), w);
    if (!back) throw std::logic_error("snake_connecting: pullback through u failed");
    return free_coords(HA, *back);
}

bool les_exact_free(const ComplexMap& u, const ComplexMap& pi) {
    const Complex& A = u.source;
    const Complex& B = u.target;
    const Complex& C = pi.target;
    int lo = 0, hi = -1;
    bool any = false;
    for (const Complex* K : {&A, &B, &C}) {
        if (K->empty()) continue;
        if (!any) { lo = K->lo; hi = K->hi(); any = true; }
        else { lo = std::min(lo, K->lo); hi = std::max(hi, K->hi()); }
    }
    if (!any) return true;
    std::map<int, HomologyClassSpace> HA, HB, HC;
    for (int q = lo - 1; q <= hi + 1; ++q) {
        HA.emplace(q, homology(A, q));
        HB.emplace(q, homology(B, q));
        HC.emplace(q, homology(C, q));
    }
    auto rank_of = [](const IntMatrix& m) { return zlin::rank_ff(m); };
    std::map<int, IntMatrix> f, g, d;
    for (int q = lo - 1; q <= hi + 1; ++q) {
        f.emplace(q, induced_map_free(u, q, HA.at(q), HB.at(q)));
        g.emplace(q, induced_map_free(pi, q, HB.at(q), HC.at(q)));
        if (q <= hi) d.emplace(q, snake_connecting(u, pi, q));
    }
    for (int q = lo - 1; q <= hi + 1; ++q) {
        if (!mul(g.at(q), f.at(q)).is_zero()) return false;
        if (rank_of(f.at(q)) + rank_of(g.at(q)) != HB.at(q).invariants.free_rank) return false;
        if (q <= hi) {
            if (!mul(d.at(q), g.at(q)).is_zero()) return false;
            if (rank_of(g.at(q)) + rank_of(d.at(q)) != HC.at(q).invariants.free_rank) return false;
            if (f.count(q + 1)) {
                if (!mul(f.at(q + 1), d.at(q)).is_zero()) return false;
                if (rank_of(d.at(q)) + rank_of(f.at(q + 1)) != HA.at(q + 1).invariants.free_rank)
                    return false;
            }
        }
    }
    return true;
}

} // namespace complexes
} // namespace logdegen
