#pragma once

// Dual graphs of nodal curves and their chain/cochain complexes.  A graph is
// stored branch-first: every edge carries two branches (the two preimages of
// the node on the normalization), an involution swaps them, and self-loops
// and parallel edges are allowed.

#include <cstddef>
#include <utility>
#include <vector>

#include "logdegen/matrix.hpp"
#include "logdegen/zlin.hpp"

namespace logdegen::degeneration {

struct DualGraph {
    std::size_t num_vertices = 0;
    std::size_t num_edges = 0;
    std::vector<std::size_t> eps;  // branch -> edge, size 2*num_edges
    std::vector<std::size_t> zeta; // branch -> vertex
    std::vector<std::size_t> iota; // branch involution exchanging the two halves of each edge
};

// validates: at least one vertex, iota a fixed-point-free involution
// compatible with eps, and every edge fiber exactly a swapped branch pair
DualGraph make_dual_graph(std::size_t num_vertices, std::size_t num_edges,
                          std::vector<std::size_t> eps, std::vector<std::size_t> zeta,
                          std::vector<std::size_t> iota);

// edge list constructor: edge e = (tail, head) gets branches 2e (at tail)
// and 2e+1 (at head)
DualGraph graph_from_edges(std::size_t num_vertices,
                           const std::vector<std::pair<std::size_t, std::size_t>>& edges);

// per-edge ordered branch pair (y1, y2); the sign conventions below hang off it
using Orientation = std::vector<std::pair<std::size_t, std::size_t>>;

// the pair (2e, 2e+1) for every edge
Orientation default_orientation(const DualGraph& g);

struct GraphComplexes {
    IntMatrix d1; // |V| x |E| boundary: edge e -> vertex(y1) - vertex(y2)
    IntMatrix d0; // |E| x |V| coboundary, the transpose of d1 in these bases
    IntMatrix t;  // |E| x |E| identification of cochains with chains (identity here)
};

// errors on an orientation that does not list each edge's two branches
GraphComplexes build_complexes(const DualGraph& g, const Orientation& orientation);

struct GraphHomology {
    zlin::AbelianGroupInvariants h0_chain;   // coker d1
    zlin::AbelianGroupInvariants h1_chain;   // ker d1
    zlin::AbelianGroupInvariants h0_cochain; // ker d0
    zlin::AbelianGroupInvariants h1_cochain; // coker d0
    IntMatrix cycle_basis;    // |E| x h1: saturated integral basis of ker d1
    IntMatrix constant_basis; // |V| x h0: basis of ker d0
    IntMatrix cocycle_proj;   // h1 x |E|: projection onto the chosen basis of coker d0
    IntMatrix cocycle_lift;   // |E| x h1: section of cocycle_proj
};

// throws if any of the four groups has torsion (they never should for a
// graph; torsion here means the incidence matrices were built wrong)
GraphHomology graph_homology(const GraphComplexes& gc);

// checks d1*t*d0 against the combinatorial Laplacian (self-loops drop out)
// and the cochain Gram matrix entries against shared-edge counts
bool graph_laplacian_identities(const DualGraph& g, const GraphComplexes& gc);

bool is_connected(const DualGraph& g);

} // namespace logdegen::degeneration
