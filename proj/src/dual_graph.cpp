#include "logdegen/dual_graph.hpp"

#include <numeric>
#include <stdexcept>

namespace logdegen::degeneration {

DualGraph make_dual_graph(std::size_t num_vertices, std::size_t num_edges,
                          std::vector<std::size_t> eps, std::vector<std::size_t> zeta,
                          std::vector<std::size_t> iota) {
    if (num_vertices == 0) throw std::invalid_argument("dual graph: need at least one vertex");
    const std::size_t nb = 2 * num_edges;
    if (eps.size() != nb || zeta.size() != nb || iota.size() != nb)
        throw std::invalid_argument("dual graph: branch maps must have size 2*|E|");
    for (std::size_t b = 0; b < nb; ++b) {
        if (eps[b] >= num_edges) throw std::invalid_argument("dual graph: eps out of range");
        if (zeta[b] >= num_vertices) throw std::invalid_argument("dual graph: zeta out of range");
        if (iota[b] >= nb) throw std::invalid_argument("dual graph: iota out of range");
        if (iota[b] == b) throw std::invalid_argument("dual graph: iota must be fixed point free");
        if (iota[iota[b]] != b) throw std::invalid_argument("dual graph: iota must be an involution");
        if (eps[iota[b]] != eps[b])
            throw std::invalid_argument("dual graph: iota must preserve edges");
    }
    // each edge fiber is exactly one swapped pair
    std::vector<std::size_t> fiber_size(num_edges, 0);
    for (std::size_t b = 0; b < nb; ++b) ++fiber_size[eps[b]];
    for (std::size_t e = 0; e < num_edges; ++e)
        if (fiber_size[e] != 2)
            throw std::invalid_argument("dual graph: every edge needs exactly two branches");
    return DualGraph{num_vertices, num_edges, std::move(eps), std::move(zeta), std::move(iota)};
}

DualGraph graph_from_edges(std::size_t num_vertices,
                           const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> eps, zeta, iota;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        eps.push_back(e);
        eps.push_back(e);
        zeta.push_back(edges[e].first);
        zeta.push_back(edges[e].second);
        iota.push_back(2 * e + 1);
        iota.push_back(2 * e);
    }
    return make_dual_graph(num_vertices, edges.size(), std::move(eps), std::move(zeta),
                           std::move(iota));
}

Orientation default_orientation(const DualGraph& g) {
    Orientation o;
    for (std::size_t e = 0; e < g.num_edges; ++e) {
        std::size_t b1 = 2 * g.num_edges; // sentinel
        for (std::size_t b = 0; b < g.eps.size(); ++b)
            if (g.eps[b] == e) {
                b1 = b;
                break;
            }
        o.emplace_back(b1, g.iota[b1]);
    }
    return o;
}

GraphComplexes build_complexes(const DualGraph& g, const Orientation& orientation) {
    if (orientation.size() != g.num_edges)
        throw std::invalid_argument("orientation: one branch pair per edge required");
    IntMatrix d1 = IntMatrix::zero(g.num_vertices, g.num_edges);
    for (std::size_t e = 0; e < g.num_edges; ++e) {
        auto [y1, y2] = orientation[e];
        if (y1 >= g.eps.size() || y2 >= g.eps.size() || g.eps[y1] != e || g.eps[y2] != e ||
            g.iota[y1] != y2)
            throw std::invalid_argument("orientation: entry is not the branch pair of its edge");
        d1.at(g.zeta[y1], e) += 1;
        d1.at(g.zeta[y2], e) -= 1; // self-loop: the two signs cancel
    }
    return GraphComplexes{d1, transpose(d1), IntMatrix::identity(g.num_edges)};
}

GraphHomology graph_homology(const GraphComplexes& gc) {
    GraphHomology out;
    out.cycle_basis = zlin::kernel_basis(gc.d1);
    out.constant_basis = zlin::kernel_basis(gc.d0);
    out.h1_chain = {out.cycle_basis.cols, {}};
    out.h0_cochain = {out.constant_basis.cols, {}};
    out.h0_chain = zlin::cokernel_invariants(gc.d1);
    out.h1_cochain = zlin::cokernel_invariants(gc.d0);
    if (!out.h0_chain.torsion.empty() || !out.h1_cochain.torsion.empty())
        throw std::runtime_error("graph homology: torsion detected, incidence matrices malformed");

    // integral basis of coker d0: split off the image using Smith form
    const std::size_t ne = gc.d0.rows;
    zlin::SmithForm sf = zlin::smith_normal_form(gc.d0);
    std::size_t r = 0;
    while (r < ne && r < gc.d0.cols && sf.D.at(r, r) != 0) ++r;
    IntMatrix uinv = zlin::inverse_unimodular(sf.U);
    out.cocycle_proj = sf.U.submatrix(r, 0, ne - r, ne);
    out.cocycle_lift = uinv.submatrix(0, r, ne, ne - r);
    return out;
}

bool graph_laplacian_identities(const DualGraph& g, const GraphComplexes& gc) {
    const std::size_t nv = g.num_vertices;
    // shared-edge counts by direct enumeration, self-loops excluded
    IntMatrix lap = IntMatrix::zero(nv, nv);
    for (std::size_t e = 0; e < g.num_edges; ++e) {
        std::size_t b = 0;
        while (g.eps[b] != e) ++b;
        std::size_t v = g.zeta[b], w = g.zeta[g.iota[b]];
        if (v == w) continue;
        lap.at(v, w) -= 1;
        lap.at(w, v) -= 1;
        lap.at(v, v) += 1;
        lap.at(w, w) += 1;
    }
    if (mul(gc.d1, mul(gc.t, gc.d0)) != lap) return false;
    return mul(transpose(gc.d0), gc.d0) == lap;
}

bool is_connected(const DualGraph& g) {
    std::vector<std::size_t> parent(g.num_vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t b = 0; b < g.eps.size(); ++b)
        parent[find(g.zeta[b])] = find(g.zeta[g.iota[b]]);
    std::size_t root = find(0);
    for (std::size_t v = 1; v < g.num_vertices; ++v)
        if (find(v) != root) return false;
    return true;
}

} // namespace logdegen::degeneration
