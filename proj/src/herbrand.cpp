#include "logdegen/herbrand.hpp"

#include <stdexcept>

namespace logdegen {
namespace complexes {

using zlin::hnf_columns;
using zlin::solve;

static ComplexMap lambda_of(const ComplexWithAutomorphism& K) {
    return map_sub(K.rho, identity_map(K.base));
}

Complex herbrand_complex(const ComplexWithAutomorphism& K) {
    return cocone(lambda_of(K));
}

std::vector<HerbrandDegreeCheck> herbrand_sequence_check(const ComplexWithAutomorphism& K) {
    std::vector<HerbrandDegreeCheck> out;
    if (K.base.empty()) return out;
    ComplexMap lam = lambda_of(K);
    CoconeResult C = cocone_with_maps(lam);
    for (int q = K.base.lo; q <= K.base.hi() + 1; ++q) {
        HerbrandDegreeCheck chk;
        chk.degree = q;
        HomologyClassSpace HC = homology(C.cx, q);
        HomologyClassSpace Hq = homology(K.base, q);
        HomologyClassSpace Hq1 = homology(K.base, q - 1);
        chk.middle = HC.invariants;
        IntMatrix Nq = induced_map_presented(lam, q, Hq, Hq);
        IntMatrix Nq1 = induced_map_presented(lam, q - 1, Hq1, Hq1);
        PresentedGroup Gq = homology_presented(Hq);
        PresentedGroup Gq1 = homology_presented(Hq1);
        PresentedGroup GC = homology_presented(HC);
        PresentedGroup Cok{Gq1.ambient, hnf_columns(hstack(Nq1, Gq1.relations))};
        IntMatrix P = preimage_lattice(Nq, Gq.relations);
        auto relK = solve(P, Gq.relations);
        if (!relK) throw std::logic_error("herbrand: relations escape the kernel lattice");
        PresentedGroup Ker{P.cols, *relK};

        // coker(lambda|H^{q-1}) -> H^q(C):  [y] -> class of (0, y)
        IntMatrix emb = vstack(IntMatrix::zero(K.base.rank(q), Hq1.adapted.cols), Hq1.adapted);
        auto fb = class_coords(HC, emb);
        if (!fb) throw std::logic_error("herbrand: embedded invariant cycle is not a cycle");

        // H^q(C) -> ker(lambda|H^q):  [(a, b)] -> [a], written in the lattice
        // basis of the kernel subgroup
        IntMatrix aparts = mul(C.proj.component(q), HC.adapted);
        auto f0 = class_coords(Hq, aparts);
        if (!f0) throw std::logic_error("herbrand: front component of a cycle is not a cycle");
        auto fa = solve(P, *f0);
        if (!fa) throw std::logic_error("herbrand: front component escapes the kernel lattice");

        chk.injective = presented_injective(Cok, *fb, GC);
        chk.exact = presented_exact(Cok, *fb, GC, *fa, Ker);
        chk.surjective = presented_surjective(GC, *fa, Ker);
        out.push_back(std::move(chk));
    }
    return out;
}

bool herbrand_identity_splitting_check(const Complex& K) {
    if (K.empty()) return true;
    ComplexWithAutomorphism A = make_complex_with_automorphism(K, identity_map(K));
    Complex C = herbrand_complex(A);
    for (int q = K.lo; q <= K.hi() + 1; ++q) {
        HomologyClassSpace HC = homology(C, q);
        HomologyClassSpace Hq = homology(K, q);
        HomologyClassSpace Hq1 = homology(K, q - 1);
        PresentedGroup sum{Hq.cycle_rank() + Hq1.cycle_rank(),
                           block_diag(homology_presented(Hq).relations,
                                      homology_presented(Hq1).relations)};
        if (!(presented_invariants(sum) == HC.invariants)) return false;
    }
    return true;
}

} // namespace complexes
} // namespace logdegen
