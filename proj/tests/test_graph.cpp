#include "doctest.h"

#include <stdexcept>
#include <utility>
#include <vector>

#include "logdegen/dual_graph.hpp"
#include "test_util.hpp"

using namespace logdegen;
using namespace logdegen::degeneration;
using testutil::Rng;

namespace {

// connected components by direct union-find, independent of the matrices
std::size_t component_count(const DualGraph& g) {
    std::vector<std::size_t> parent(g.num_vertices);
    for (std::size_t v = 0; v < g.num_vertices; ++v) parent[v] = v;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t b = 0; b < g.eps.size(); ++b)
        parent[find(g.zeta[b])] = find(g.zeta[g.iota[b]]);
    std::size_t n = 0;
    for (std::size_t v = 0; v < g.num_vertices; ++v)
        if (find(v) == v) ++n;
    return n;
}

DualGraph random_graph(Rng& rng) {
    std::size_t nv = static_cast<std::size_t>(rng.pick(1, 6));
    std::size_t ne = static_cast<std::size_t>(rng.pick(0, 10));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t e = 0; e < ne; ++e)
        edges.emplace_back(static_cast<std::size_t>(rng.pick(0, static_cast<long>(nv) - 1)),
                           static_cast<std::size_t>(rng.pick(0, static_cast<long>(nv) - 1)));
    return graph_from_edges(nv, edges);
}

} // namespace

TEST_CASE("incidence matrices of the basic graphs") {
    // one vertex, one self-loop: both differentials vanish
    DualGraph loop = graph_from_edges(1, {{0, 0}});
    GraphComplexes gc = build_complexes(loop, default_orientation(loop));
    CHECK(gc.d1 == IntMatrix::zero(1, 1));
    CHECK(gc.d0 == IntMatrix::zero(1, 1));
    CHECK(gc.t == IntMatrix::identity(1));

    // two vertices, one edge
    DualGraph seg = graph_from_edges(2, {{0, 1}});
    gc = build_complexes(seg, default_orientation(seg));
    CHECK(gc.d1 == IntMatrix{{1}, {-1}});
    CHECK(gc.d0 == IntMatrix{{1, -1}});

    // banana with aligned orientation: n copies of the same column
    for (std::size_t n = 2; n <= 4; ++n) {
        std::vector<std::pair<std::size_t, std::size_t>> edges(n, {0, 1});
        DualGraph banana = graph_from_edges(2, edges);
        gc = build_complexes(banana, default_orientation(banana));
        for (std::size_t e = 0; e < n; ++e) {
            CHECK(gc.d1.at(0, e) == 1);
            CHECK(gc.d1.at(1, e) == -1);
        }
    }
}

TEST_CASE("boundary and coboundary are adjoint") {
    Rng rng(75001);
    for (int t = 0; t < 100; ++t) {
        DualGraph g = random_graph(rng);
        GraphComplexes gc = build_complexes(g, default_orientation(g));
        CHECK(gc.d0 == transpose(gc.d1));
        CHECK(gc.t == IntMatrix::identity(g.num_edges));
    }
}

TEST_CASE("graph validation rejects malformed data") {
    CHECK_THROWS_AS(make_dual_graph(0, 0, {}, {}, {}), std::invalid_argument);
    // iota with a fixed point
    CHECK_THROWS_AS(make_dual_graph(1, 1, {0, 0}, {0, 0}, {0, 1}), std::invalid_argument);
    // iota not preserving the edge
    CHECK_THROWS_AS(make_dual_graph(1, 2, {0, 0, 1, 1}, {0, 0, 0, 0}, {2, 3, 0, 1}),
                    std::invalid_argument);
    // edge fiber of size four
    CHECK_THROWS_AS(make_dual_graph(1, 2, {0, 0, 0, 0}, {0, 0, 0, 0}, {1, 0, 3, 2}),
                    std::invalid_argument);
    // out-of-range vertex
    CHECK_THROWS_AS(make_dual_graph(1, 1, {0, 0}, {0, 5}, {1, 0}), std::invalid_argument);
    // wrong map sizes
    CHECK_THROWS_AS(make_dual_graph(1, 1, {0}, {0, 0}, {1, 0}), std::invalid_argument);
    CHECK_NOTHROW(make_dual_graph(1, 1, {0, 0}, {0, 0}, {1, 0}));
}

TEST_CASE("orientation validation and sign flip") {
    DualGraph seg = graph_from_edges(2, {{0, 1}});
    // the pair must be the branch pair of its edge, in some order
    CHECK_THROWS_AS(build_complexes(seg, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_complexes(seg, {}), std::invalid_argument);
    GraphComplexes fwd = build_complexes(seg, {{0, 1}});
    GraphComplexes bwd = build_complexes(seg, {{1, 0}});
    CHECK(bwd.d1 == neg(fwd.d1));
    CHECK(bwd.d0 == neg(fwd.d0));
}

TEST_CASE("homology of the standard graphs") {
    auto invariants = [](const DualGraph& g) {
        return graph_homology(build_complexes(g, default_orientation(g)));
    };
    {
        GraphHomology h = invariants(graph_from_edges(1, {{0, 0}}));
        CHECK(h.h1_chain.free_rank == 1);
        CHECK(h.h0_chain.free_rank == 1);
        CHECK(h.h0_cochain.free_rank == 1);
        CHECK(h.h1_cochain.free_rank == 1);
    }
    {
        // path on five vertices: a tree
        GraphHomology h = invariants(graph_from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
        CHECK(h.h1_chain.free_rank == 0);
        CHECK(h.h0_chain.free_rank == 1);
        CHECK(h.h1_cochain.free_rank == 0);
        CHECK(h.cycle_basis.cols == 0);
        CHECK(h.cocycle_lift.cols == 0);
    }
    {
        // theta: two vertices joined by three edges
        DualGraph theta = graph_from_edges(2, {{0, 1}, {0, 1}, {0, 1}});
        GraphHomology h = invariants(theta);
        CHECK(h.h1_chain.free_rank == 2);
        CHECK(h.h1_cochain.free_rank == 2);
        CHECK(h.h0_chain.free_rank == 1);
        // euler characteristic |V| - |E| = h0 - h1
        CHECK(static_cast<long>(theta.num_vertices) - static_cast<long>(theta.num_edges) ==
              static_cast<long>(h.h0_chain.free_rank) - static_cast<long>(h.h1_chain.free_rank));
    }
}

TEST_CASE("homology ranks against euler characteristic, fuzzed") {
    Rng rng(75002);
    for (int t = 0; t < 100; ++t) {
        DualGraph g = random_graph(rng);
        GraphComplexes gc = build_complexes(g, default_orientation(g));
        GraphHomology h = graph_homology(gc);
        std::size_t comps = component_count(g);
        CHECK(h.h0_chain.free_rank == comps);
        CHECK(h.h0_cochain.free_rank == comps);
        CHECK(h.h1_chain.free_rank ==
              g.num_edges + comps - g.num_vertices); // E - V + number of components
        CHECK(h.h1_chain.free_rank == h.h1_cochain.free_rank);
        CHECK(h.h0_chain.torsion.empty());
        CHECK(h.h1_cochain.torsion.empty());
        CHECK(is_connected(g) == (comps == 1));
        // the cycle basis is saturated and actually consists of cycles
        CHECK(mul(gc.d1, h.cycle_basis) ==
              IntMatrix::zero(g.num_vertices, h.cycle_basis.cols));
        CHECK(zlin::is_saturated_lattice(h.cycle_basis));
    }
}

TEST_CASE("cocycle projection and lift split the coboundary image") {
    Rng rng(75003);
    for (int t = 0; t < 100; ++t) {
        DualGraph g = random_graph(rng);
        GraphComplexes gc = build_complexes(g, default_orientation(g));
        GraphHomology h = graph_homology(gc);
        std::size_t b = h.h1_cochain.free_rank;
        CHECK(h.cocycle_proj.rows == b);
        CHECK(h.cocycle_lift.cols == b);
        CHECK(mul(h.cocycle_proj, h.cocycle_lift) == IntMatrix::identity(b));
        // the projection kills exactly the coboundaries
        CHECK(mul(h.cocycle_proj, gc.d0) == IntMatrix::zero(b, g.num_vertices));
        // image of d0 plus the lift spans everything
        CHECK(zlin::rank_ff(hstack(gc.d0, h.cocycle_lift)) == g.num_edges);
    }
}

TEST_CASE("laplacian identities, pinned") {
    // isolated vertex
    DualGraph pt = graph_from_edges(1, {});
    CHECK(graph_laplacian_identities(pt, build_complexes(pt, default_orientation(pt))));

    // two vertices, one edge: gram entries 1 on the diagonal, -1 off it
    DualGraph seg = graph_from_edges(2, {{0, 1}});
    GraphComplexes gc = build_complexes(seg, default_orientation(seg));
    IntMatrix gram = mul(transpose(gc.d0), gc.d0);
    CHECK(gram == IntMatrix{{1, -1}, {-1, 1}});
    CHECK(graph_laplacian_identities(seg, gc));

    // self-loops contribute nothing
    DualGraph mixed = graph_from_edges(2, {{0, 1}, {0, 0}, {1, 1}, {0, 1}});
    gc = build_complexes(mixed, default_orientation(mixed));
    gram = mul(transpose(gc.d0), gc.d0);
    CHECK(gram == IntMatrix{{2, -2}, {-2, 2}});
    CHECK(graph_laplacian_identities(mixed, gc));
}

TEST_CASE("laplacian identities, fuzzed") {
    Rng rng(75004);
    for (int t = 0; t < 100; ++t) {
        DualGraph g = random_graph(rng);
        CHECK(graph_laplacian_identities(g, build_complexes(g, default_orientation(g))));
    }
}

TEST_CASE("connectivity detection") {
    CHECK(is_connected(graph_from_edges(1, {})));
    CHECK(is_connected(graph_from_edges(1, {{0, 0}})));
    CHECK(is_connected(graph_from_edges(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(is_connected(graph_from_edges(2, {})));
    CHECK_FALSE(is_connected(graph_from_edges(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(is_connected(graph_from_edges(3, {{0, 1}, {1, 0}})));
}
