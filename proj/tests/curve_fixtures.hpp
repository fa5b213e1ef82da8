#pragma once

// Named degeneration fixtures and a seeded generator of random connected
// curves, shared between the unit tests and the acceptance run.

#include <utility>
#include <vector>

#include "logdegen/degeneration.hpp"
#include "logdegen/dual_graph.hpp"
#include "test_util.hpp"

namespace curvefix {

using logdegen::degeneration::DualGraph;
using logdegen::degeneration::LogCurveData;

inline LogCurveData from_edges(std::size_t nv,
                               const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                               std::vector<long> genus, std::vector<long> nu) {
    DualGraph g = logdegen::degeneration::graph_from_edges(nv, edges);
    auto o = logdegen::degeneration::default_orientation(g);
    return logdegen::degeneration::make_log_curve(std::move(g), std::move(genus), std::move(nu),
                                                  std::move(o));
}

// rational curve with one node
inline LogCurveData nodal_cubic(long nu = 1) { return from_edges(1, {{0, 0}}, {0}, {nu}); }

// cycle of n rational curves
inline LogCurveData cycle_curve(std::size_t n, long nu = 1) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return from_edges(n, edges, std::vector<long>(n, 0), std::vector<long>(n, nu));
}

// two rational components meeting in three nodes
inline LogCurveData theta_curve(std::vector<long> nu = {1, 1, 1}) {
    return from_edges(2, {{0, 1}, {0, 1}, {0, 1}}, {0, 0}, std::move(nu));
}

// smooth curve of genus g
inline LogCurveData smooth_curve(long g) { return from_edges(1, {}, {g}, {}); }

// two components, n parallel edges
inline LogCurveData banana_curve(std::vector<long> nu, std::vector<long> genus = {0, 0}) {
    std::vector<std::pair<std::size_t, std::size_t>> edges(nu.size(), {0, 1});
    return from_edges(2, edges, std::move(genus), std::move(nu));
}

// connected: spanning tree plus extra edges and self-loops
inline LogCurveData random_curve(testutil::Rng& rng, std::size_t max_vertices = 6,
                                 std::size_t max_edges = 10, long max_genus = 3,
                                 long max_nu = 4) {
    std::size_t nv = static_cast<std::size_t>(rng.pick(1, static_cast<long>(max_vertices)));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 1; v < nv; ++v)
        edges.emplace_back(static_cast<std::size_t>(rng.pick(0, static_cast<long>(v) - 1)), v);
    long extra = rng.pick(0, static_cast<long>(max_edges - edges.size()));
    for (long i = 0; i < extra; ++i)
        edges.emplace_back(static_cast<std::size_t>(rng.pick(0, static_cast<long>(nv) - 1)),
                           static_cast<std::size_t>(rng.pick(0, static_cast<long>(nv) - 1)));
    std::vector<long> genus(nv), nu(edges.size());
    for (auto& g : genus) g = rng.pick(0, max_genus);
    for (auto& n : nu) n = rng.pick(1, max_nu);
    return from_edges(nv, edges, std::move(genus), std::move(nu));
}

// the ten standing examples used across the acceptance checks
inline std::vector<LogCurveData> standard_fixtures() {
    return {
        nodal_cubic(1),
        nodal_cubic(3),
        cycle_curve(2),
        cycle_curve(3),
        cycle_curve(4),
        cycle_curve(5),
        theta_curve(),
        smooth_curve(2),
        banana_curve({1, 2, 3}, {1, 0}),
        from_edges(3, {{0, 1}, {1, 2}, {2, 0}, {1, 1}}, {0, 2, 1}, {2, 1, 3, 4}),
    };
}

} // namespace curvefix
