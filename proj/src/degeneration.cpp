#include "logdegen/degeneration.hpp"

#include <numeric>
#include <stdexcept>

#include "logdegen/zlin.hpp"

namespace logdegen::degeneration {

namespace {

void require_connected(const LogCurveData& data, const char* who) {
    if (!is_connected(data.graph))
        throw std::invalid_argument(std::string(who) + ": curve must be connected");
}

long total_genus(const LogCurveData& data) {
    return std::accumulate(data.genus.begin(), data.genus.end(), 0L);
}

IntMatrix nu_diagonal(const LogCurveData& data) {
    IntMatrix d = IntMatrix::zero(data.nu.size(), data.nu.size());
    for (std::size_t e = 0; e < data.nu.size(); ++e) d.at(e, e) = Int(data.nu[e]);
    return d;
}

} // namespace

LogCurveData make_log_curve(DualGraph graph, std::vector<long> genus, std::vector<long> nu,
                            Orientation orientation) {
    if (genus.size() != graph.num_vertices)
        throw std::invalid_argument("log curve: one genus per vertex required");
    if (nu.size() != graph.num_edges)
        throw std::invalid_argument("log curve: one multiplicity per edge required");
    for (long g : genus)
        if (g < 0) throw std::invalid_argument("log curve: genus must be nonnegative");
    for (long n : nu)
        if (n < 1) throw std::invalid_argument("log curve: multiplicities must be positive");
    // delegates the branch-pair checks
    build_complexes(graph, orientation);
    return LogCurveData{std::move(graph), std::move(genus), std::move(nu),
                        std::move(orientation)};
}

BettiReport betti_report(const LogCurveData& data) {
    require_connected(data, "betti_report");
    GraphComplexes gc = build_complexes(data.graph, data.orientation);
    BettiReport r;
    r.h1_graph = static_cast<long>(data.graph.num_edges) -
                 static_cast<long>(zlin::rank_ff(gc.d1));
    r.h1_X = r.h1_graph + 2 * total_genus(data);
    r.h1_fiber = r.h1_graph + r.h1_X;
    r.genus = r.h1_fiber / 2;
    long alt = 1 + total_genus(data) + static_cast<long>(data.graph.num_edges) -
               static_cast<long>(data.graph.num_vertices);
    if (r.genus != alt)
        throw std::runtime_error("betti_report: genus formulas disagree");
    return r;
}

SpectralSequenceReport spectral_sequence(const LogCurveData& data) {
    require_connected(data, "spectral_sequence");
    GraphComplexes gc = build_complexes(data.graph, data.orientation);
    BettiReport betti = betti_report(data);
    SpectralSequenceReport rep;
    rep.e2[0][0] = 1;
    rep.e2[1][0] = betti.h1_X;
    rep.e2[2][0] = static_cast<long>(data.graph.num_vertices);
    rep.e2[0][1] = static_cast<long>(data.graph.num_edges);
    rep.e2[1][1] = 0;
    rep.e2[2][1] = 0;
    rep.d2 = neg(gc.d1);

    long rank_d2 = static_cast<long>(zlin::rank_ff(rep.d2));
    rep.einf = rep.e2;
    rep.einf[0][1] = rep.e2[0][1] - rank_d2; // kernel of d2
    rep.einf[2][0] = rep.e2[2][0] - rank_d2; // cokernel of d2, free part
    if (rep.einf[0][1] != betti.h1_graph)
        throw std::runtime_error("spectral_sequence: kernel of d2 is not the cycle space");
    if (rep.einf[2][0] != 1)
        throw std::runtime_error("spectral_sequence: cokernel of d2 must have rank one");
    rep.h1_general_fiber = betti.h1_fiber;
    rep.genus = betti.genus;
    return rep;
}

IntMatrix monodromy_pairing(const LogCurveData& data) {
    GraphComplexes gc = build_complexes(data.graph, data.orientation);
    IntMatrix H = zlin::kernel_basis(gc.d1);
    IntMatrix Q = mul(transpose(H), mul(nu_diagonal(data), H));
    if (Q != transpose(Q)) throw std::runtime_error("monodromy pairing: not symmetric");
    for (std::size_t m = 1; m <= Q.rows; ++m)
        if (zlin::det_bareiss(Q.submatrix(0, 0, m, m)) <= 0)
            throw std::runtime_error("monodromy pairing: not positive definite");
    return Q;
}

MonodromyReport picard_lefschetz(const LogCurveData& data, long k) {
    require_connected(data, "picard_lefschetz");
    GraphComplexes gc = build_complexes(data.graph, data.orientation);
    GraphHomology gh = graph_homology(gc);

    MonodromyReport rep;
    rep.pairing_gram = monodromy_pairing(data);
    const std::size_t beta = gh.cycle_basis.cols;
    const std::size_t middle = 2 * static_cast<std::size_t>(total_genus(data));
    rep.basis_blocks = {beta, middle, beta};

    // the only nonzero block: cycles pair into cocycle classes through -nu
    IntMatrix M = scalar_mul(Int(k),
                             mul(gh.cocycle_proj, mul(neg(nu_diagonal(data)), gh.cycle_basis)));
    const std::size_t n = 2 * beta + middle;
    rep.N = IntMatrix::zero(n, n);
    for (std::size_t i = 0; i < beta; ++i)
        for (std::size_t j = 0; j < beta; ++j) rep.N.at(i, beta + middle + j) = M.at(i, j);
    rep.rho = add(IntMatrix::identity(n), rep.N);
    rep.unipotency_index = (rep.N == IntMatrix::zero(n, n)) ? 1 : 2;
    return rep;
}

long gluing_euler_oracle(const LogCurveData& data) {
    require_connected(data, "gluing_euler_oracle");
    std::vector<long> degree(data.graph.num_vertices, 0);
    for (std::size_t b = 0; b < data.graph.zeta.size(); ++b) ++degree[data.graph.zeta[b]];
    long chi = 0;
    for (std::size_t v = 0; v < data.graph.num_vertices; ++v)
        chi += 2 - 2 * data.genus[v] - degree[v];
    if ((2 - chi) % 2 != 0)
        throw std::runtime_error("gluing_euler_oracle: odd euler characteristic");
    return (2 - chi) / 2;
}

IntMatrix vanishing_cocycle_basis(const LogCurveData& data) {
    GraphComplexes gc = build_complexes(data.graph, data.orientation);
    return graph_homology(gc).cocycle_lift;
}

} // namespace logdegen::degeneration
