#include "logdegen/koszul.hpp"

#include "logdegen/homology.hpp"
#include "logdegen/zlin.hpp"

#include <stdexcept>

namespace logdegen {
namespace koszul {

using multilinear::comult_eta_split;
using multilinear::mult_mu_split;
using multilinear::power_functor;
using multilinear::power_rank;
using multilinear::PowerKind;

KoszulComplex koszul_complex(const IntMatrix& u, std::size_t q) {
    const std::size_t nA = u.cols, nB = u.rows;
    std::vector<std::size_t> ranks(q + 1);
    for (std::size_t p = 0; p <= q; ++p)
        ranks[p] = power_rank(PowerKind::Divided, nA, q - p) * power_rank(PowerKind::Wedge, nB, p);
    std::vector<IntMatrix> diffs;
    for (std::size_t p = 0; p + 1 <= q; ++p) {
        const std::size_t gsmall = power_rank(PowerKind::Divided, nA, q - p - 1);
        const std::size_t wp = power_rank(PowerKind::Wedge, nB, p);
        IntMatrix split = kron(comult_eta_split(PowerKind::Divided, nA, q - p - 1, 1),
                               IntMatrix::identity(wp));
        IntMatrix insert = kron(IntMatrix::identity(gsmall), kron(u, IntMatrix::identity(wp)));
        IntMatrix merge =
            kron(IntMatrix::identity(gsmall), mult_mu_split(PowerKind::Wedge, nB, 1, p));
        diffs.push_back(mul(merge, mul(insert, split)));
    }
    return KoszulComplex{u, q, complexes::make_complex(0, std::move(ranks), std::move(diffs))};
}

SplitSes make_split_ses(IntMatrix u, IntMatrix pi, IntMatrix s) {
    if (pi.cols != u.rows || s.rows != pi.cols || s.cols != pi.rows)
        throw std::invalid_argument("split ses: inconsistent dimensions");
    if (!mul(pi, u).is_zero()) throw std::invalid_argument("split ses: pi o u != 0");
    if (mul(pi, s) != IntMatrix::identity(pi.rows))
        throw std::invalid_argument("split ses: s is not a section of pi");
    if (zlin::rank_ff(u) != u.cols) throw std::invalid_argument("split ses: u is not injective");
    if (u.cols > 0 && !zlin::is_saturated_lattice(u))
        throw std::invalid_argument("split ses: image of u is not saturated");
    if (!zlin::same_column_lattice(zlin::kernel_basis(pi), u))
        throw std::invalid_argument("split ses: im u != ker pi");
    return SplitSes{std::move(u), std::move(pi), std::move(s)};
}

ComplexMap koszul_augmentation(const SplitSes& ses, std::size_t q) {
    Complex top = complexes::shift(koszul_complex(ses.u, q).cx, static_cast<int>(q));
    const std::size_t nC = ses.pi.rows;
    Complex point = complexes::single_term(0, power_rank(PowerKind::Wedge, nC, q));
    std::map<int, IntMatrix> comp;
    comp[0] = power_functor(PowerKind::Wedge, ses.pi, q);
    return complexes::make_complex_map(std::move(top), std::move(point), std::move(comp));
}

bool koszul_quasi_iso_check(const SplitSes& ses, std::size_t q) {
    return complexes::is_quasi_iso(koszul_augmentation(ses, q));
}

IntMatrix koszul_filtration(const IntMatrix& u, std::size_t q, long i) {
    const std::size_t nB = u.rows;
    const std::size_t dim = power_rank(PowerKind::Wedge, nB, q);
    if (i <= 0) return IntMatrix::identity(dim);
    if (i > static_cast<long>(q)) return IntMatrix::zero(dim, 0);
    if (zlin::rank_ff(u) != u.cols)
        throw std::invalid_argument("koszul filtration: u is not injective");
    if (u.cols > 0 && !zlin::is_saturated_lattice(u))
        throw std::invalid_argument("koszul filtration: image of u is not saturated");
    const std::size_t ii = static_cast<std::size_t>(i);
    IntMatrix wu = power_functor(PowerKind::Wedge, u, ii);
    IntMatrix mm = mult_mu_split(PowerKind::Wedge, nB, ii, q - ii);
    const std::size_t rest = power_rank(PowerKind::Wedge, nB, q - ii);
    return zlin::hnf_columns(mul(mm, kron(wu, IntMatrix::identity(rest))));
}

XiSequence xi_q_sequence(const SplitSes& ses, std::size_t q) {
    if (q < 1) throw std::invalid_argument("xi sequence: need q >= 1");
    const std::size_t nB = ses.u.rows, nC = ses.pi.rows;
    const std::size_t N = power_rank(PowerKind::Wedge, nB, q);
    const std::size_t cq1 = power_rank(PowerKind::Wedge, nC, q - 1);

    XiSequence X;
    X.q = q;
    IntMatrix K2 = koszul_filtration(ses.u, q, 2);
    const std::size_t k = K2.cols;
    if (k == 0) {
        X.quot_proj = IntMatrix::identity(N);
        X.quot_sect = IntMatrix::identity(N);
    } else {
        auto snf = zlin::smith_normal_form(K2);
        for (std::size_t t = 0; t < k; ++t)
            if (snf.D.at(t, t) != 1)
                throw std::runtime_error("xi sequence: filtration step is not a direct summand");
        IntMatrix uinv = zlin::inverse_unimodular(snf.U);
        X.quot_proj = snf.U.submatrix(k, 0, N - k, N);
        X.quot_sect = uinv.submatrix(0, k, N, N - k);
    }

    IntMatrix mu1 = mult_mu_split(PowerKind::Wedge, nB, 1, q - 1);
    IntMatrix wedge_s = power_functor(PowerKind::Wedge, ses.s, q - 1);
    X.u_q = mul(X.quot_proj, mul(mu1, kron(ses.u, wedge_s)));

    IntMatrix wedge_pi = power_functor(PowerKind::Wedge, ses.pi, q);
    X.pi_q = mul(wedge_pi, X.quot_sect);

    IntMatrix strip =
        kron(IntMatrix::identity(nB), power_functor(PowerKind::Wedge, ses.pi, q - 1));
    IntMatrix eta_b = comult_eta_split(PowerKind::Wedge, nB, 1, q - 1);
    X.zeta = mul(strip, mul(eta_b, X.quot_sect));
    X.eta_kills_k2 = mul(mul(strip, eta_b), K2).is_zero();

    // short exactness of (u_q, pi_q), including well-definedness of pi_q on W
    {
        bool pi_kills = mul(wedge_pi, K2).is_zero();
        bool comp_zero = mul(X.pi_q, X.u_q).is_zero();
        bool inj = zlin::rank_ff(X.u_q) == X.u_q.cols;
        bool sat = X.u_q.cols == 0 || zlin::is_saturated_lattice(X.u_q);
        bool kernel_match = zlin::same_column_lattice(zlin::kernel_basis(X.pi_q), X.u_q);
        auto cok = zlin::cokernel_invariants(X.pi_q);
        bool surj = cok.free_rank == 0 && cok.torsion.empty();
        X.exact = pi_kills && comp_zero && inj && sat && kernel_match && surj;
    }

    IntMatrix icq1 = IntMatrix::identity(cq1);
    X.ladder_commutes = (mul(X.zeta, X.u_q) == kron(ses.u, icq1)) &&
                        (mul(kron(ses.pi, icq1), X.zeta) ==
                         mul(comult_eta_split(PowerKind::Wedge, nC, 1, q - 1), X.pi_q));

    // connecting-map naturality: realize both rows as two-term mapping
    // complexes and compare the snake maps through the vertical comparison
    if (X.exact && X.ladder_commutes) {
        using namespace complexes;
        const std::size_t w = X.u_q.rows;
        const std::size_t bot = nB * cq1;

        Complex a_top = two_term(0, X.u_q);
        Complex b_top = two_term(0, IntMatrix::identity(w));
        Complex c_top = single_term(0, power_rank(PowerKind::Wedge, nC, q));
        ComplexMap ut = make_complex_map(
            a_top, b_top, {{0, X.u_q}, {1, IntMatrix::identity(w)}});
        ComplexMap pt = make_complex_map(b_top, c_top, {{0, X.pi_q}});
        IntMatrix delta_top = snake_connecting(ut, pt, 0);

        Complex a_bot = two_term(0, kron(ses.u, icq1));
        Complex b_bot = two_term(0, IntMatrix::identity(bot));
        Complex c_bot = single_term(0, nC * cq1);
        ComplexMap ub = make_complex_map(
            a_bot, b_bot, {{0, kron(ses.u, icq1)}, {1, IntMatrix::identity(bot)}});
        ComplexMap pb = make_complex_map(b_bot, c_bot, {{0, kron(ses.pi, icq1)}});
        IntMatrix delta_bot = snake_connecting(ub, pb, 0);

        ComplexMap va = make_complex_map(
            a_top, a_bot, {{0, IntMatrix::identity(X.u_q.cols)}, {1, X.zeta}});
        ComplexMap vc = make_complex_map(
            c_top, c_bot, {{0, comult_eta_split(PowerKind::Wedge, nC, 1, q - 1)}});

        IntMatrix va1 = induced_map_free(va, 1, homology(a_top, 1), homology(a_bot, 1));
        IntMatrix vc0 = induced_map_free(vc, 0, homology(c_top, 0), homology(c_bot, 0));
        X.connecting_matches = (mul(va1, delta_top) == mul(delta_bot, vc0));
    }
    return X;
}

static bool maps_equal(const ComplexMap& f, const ComplexMap& g) {
    return f.source == g.source && f.target == g.target && f.comp == g.comp;
}

KoszulComparison koszul_comparison(const SplitSes& ses, std::size_t q) {
    if (q < 1) throw std::invalid_argument("koszul comparison: need q >= 1");
    const std::size_t nA = ses.u.cols, nB = ses.u.rows, nC = ses.pi.rows;
    XiSequence xi = xi_q_sequence(ses, q);
    IntMatrix ia = IntMatrix::identity(nA);

    KoszulComparison R;
    R.top = complexes::shift(koszul_complex(ses.u, q).cx, static_cast<int>(q));

    const std::size_t xdim = xi.u_q.cols, wdim = xi.u_q.rows;
    ComplexMap uq_map = complexes::make_complex_map(complexes::single_term(0, xdim),
                                                    complexes::single_term(0, wdim),
                                                    {{0, xi.u_q}});
    if (q % 2 == 1) uq_map = complexes::map_scale(Int(-1), uq_map);
    auto middle = complexes::cone(uq_map);
    R.middle = middle.cx;
    R.f = middle.proj;

    R.a = complexes::make_complex_map(
        R.top, R.middle,
        {{-1, kron(ia, power_functor(PowerKind::Wedge, ses.pi, q - 1))}, {0, xi.quot_proj}});

    Complex point = complexes::single_term(0, power_rank(PowerKind::Wedge, nC, q));
    R.b = complexes::make_complex_map(R.middle, point, {{0, xi.pi_q}});
    R.e = complexes::make_complex_map(R.top, point,
                                      {{0, power_functor(PowerKind::Wedge, ses.pi, q)}});

    {
        Complex kq1 = koszul_complex(ses.u, q - 1).cx;
        std::vector<std::size_t> ranks;
        std::vector<IntMatrix> diffs;
        for (std::size_t p = 0; p + 1 <= q; ++p) ranks.push_back(nA * kq1.rank(static_cast<int>(p)));
        for (std::size_t p = 0; p + 2 <= q; ++p)
            diffs.push_back(kron(ia, kq1.diff(static_cast<int>(p))));
        R.bottom = complexes::shift(
            complexes::make_complex(0, std::move(ranks), std::move(diffs)), static_cast<int>(q));
    }

    std::map<int, IntMatrix> ccomp;
    for (int n = -static_cast<int>(q); n <= -1; ++n) {
        const std::size_t wb =
            power_rank(PowerKind::Wedge, nB, static_cast<std::size_t>(static_cast<int>(q) + n));
        ccomp[n] = kron(comult_eta_split(PowerKind::Divided, nA, 1,
                                         static_cast<std::size_t>(-n - 1)),
                        IntMatrix::identity(wb));
    }
    R.c = complexes::make_complex_map(R.top, R.bottom, std::move(ccomp));

    Complex pbot =
        complexes::single_term(-1, nA * power_rank(PowerKind::Wedge, nC, q - 1));
    R.e_bottom = complexes::make_complex_map(
        R.bottom, pbot, {{-1, kron(ia, power_functor(PowerKind::Wedge, ses.pi, q - 1))}});

    R.a_quasi_iso = complexes::is_quasi_iso(R.a);
    R.b_quasi_iso = complexes::is_quasi_iso(R.b);
    R.e_quasi_iso = complexes::is_quasi_iso(R.e);
    R.e_bottom_quasi_iso = complexes::is_quasi_iso(R.e_bottom);
    R.b_after_a_is_e = maps_equal(complexes::compose(R.b, R.a), R.e);
    R.f_after_a_matches =
        maps_equal(complexes::compose(R.f, R.a), complexes::compose(R.e_bottom, R.c));
    return R;
}

} // namespace koszul
} // namespace logdegen
