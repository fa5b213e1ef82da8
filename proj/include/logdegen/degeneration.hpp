#pragma once

// Topological invariants of a one-parameter degeneration with nodal special
// fiber, computed from the dual graph decorated with component genera and
// node multiplicities: Betti numbers of the general fiber, the weight
// spectral sequence of the nearby cycles, the monodromy pairing, and the
// Picard-Lefschetz matrix of the canonical unipotent automorphism.

#include <array>
#include <cstddef>
#include <vector>

#include "logdegen/dual_graph.hpp"
#include "logdegen/matrix.hpp"

namespace logdegen::degeneration {

struct LogCurveData {
    DualGraph graph;
    std::vector<long> genus;  // per vertex, >= 0
    std::vector<long> nu;     // per edge, >= 1: the local model parameter at each node
    Orientation orientation;  // per edge ordered branch pair
};

// validates genus/nu/orientation against the graph
LogCurveData make_log_curve(DualGraph graph, std::vector<long> genus, std::vector<long> nu,
                            Orientation orientation);

struct BettiReport {
    long h1_graph = 0; // first Betti number of the dual graph
    long h1_X = 0;     // h^1 of the special fiber
    long h1_fiber = 0; // h^1 of the general fiber
    long genus = 0;    // genus of the general fiber
    friend bool operator==(const BettiReport&, const BettiReport&) = default;
};

// requires a connected curve; cross-checks the genus against
// 1 + sum(genus) + |E| - |V| and throws on mismatch
BettiReport betti_report(const LogCurveData& data);

struct SpectralSequenceReport {
    std::array<std::array<long, 2>, 3> e2{};   // [p][q] ranks, p = 0..2, q = 0..1
    std::array<std::array<long, 2>, 3> einf{}; // same indexing
    IntMatrix d2;                              // the only differential: (0,1) -> (2,0)
    long h1_general_fiber = 0;
    long genus = 0;
    friend bool operator==(const SpectralSequenceReport&, const SpectralSequenceReport&) = default;
};

// second page of the nearby-cycle sequence; d2 is minus the graph boundary
// map, and the page degenerates after it
SpectralSequenceReport spectral_sequence(const LogCurveData& data);

// Gram matrix of the monodromy pairing on the cycle basis of the graph:
// Q[j][k] = sum_e nu(e) h_j[e] h_k[e]; symmetric positive definite
// (verified via leading principal minors)
IntMatrix monodromy_pairing(const LogCurveData& data);

struct MonodromyReport {
    IntMatrix pairing_gram;
    IntMatrix rho; // monodromy on the model basis of H^1 of the general fiber
    IntMatrix N;   // rho - id, supported on the single block H_1(graph) -> H^1(graph)
    std::array<std::size_t, 3> basis_blocks{}; // sizes: h^1(graph), 2*sum(genus), h_1(graph)
    int unipotency_index = 1;                  // 1 if N == 0 else 2
    friend bool operator==(const MonodromyReport&, const MonodromyReport&) = default;
};

// monodromy of the k-th power of the canonical generator of the deck group
MonodromyReport picard_lefschetz(const LogCurveData& data, long k);

// independent genus computation by gluing real surfaces along boundary
// circles (Euler characteristic bookkeeping only); throws if chi comes out
// odd, and must agree with betti_report
long gluing_euler_oracle(const LogCurveData& data);

// integral basis of the cocycle block inside H^1 of the special fiber,
// |E| x h1, column j = the lift of the j-th basis vector of coker d0
IntMatrix vanishing_cocycle_basis(const LogCurveData& data);

} // namespace logdegen::degeneration
