#pragma once

// JSON curve descriptions, the full analysis report, and its text/JSON/DOT
// renderers.  A curve file lists components (with genus) and nodes (with the
// two component branches, in order — that order is the edge orientation —
// and an optional multiplicity nu, default 1).

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "logdegen/degeneration.hpp"
#include "logdegen/matrix.hpp"

namespace logdegen::curveio {

// structural problem: not JSON, wrong shape/types, unknown fields
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// well-formed document that violates the data model: duplicate or dangling
// ids, out-of-range values, or a disconnected curve where the analysis
// needs a connected one
struct SemanticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CurveComponent {
    std::string id;
    long genus = 0;
};

struct CurveNode {
    std::string id;
    std::array<std::string, 2> branches{}; // component ids; order = orientation
    long nu = 1;
};

struct CurveDocument {
    std::vector<CurveComponent> components;
    std::vector<CurveNode> nodes;
};

CurveDocument parse_curve_document(const std::string& json_text);
CurveDocument load_curve_document(const std::string& path); // unreadable file -> ParseError

// resolves ids, checks ranges/uniqueness, and fixes the vertex/edge numbering
// to the document order; does not require connectivity
degeneration::LogCurveData to_log_curve(const CurveDocument& doc);

struct Report {
    std::vector<std::string> vertex_labels; // component ids, in vertex order
    std::vector<std::string> edge_labels;   // node ids, in edge order
    std::vector<long> component_genus;
    std::vector<long> node_nu;
    degeneration::BettiReport betti;
    long euler_genus = 0;
    degeneration::SpectralSequenceReport pages;
    degeneration::MonodromyReport monodromy;
    IntMatrix vanishing_basis; // |E| x h1(graph)
    long gamma_power = 1;
    friend bool operator==(const Report&, const Report&) = default;
};

// full invariant computation; requires a connected curve
Report analyze(const CurveDocument& doc, long gamma_power = 1);

std::string render_text(const Report& r);
std::string render_json(const Report& r);
Report parse_report_json(const std::string& json_text); // inverse of render_json

// Graphviz multigraph (validates the document, connectivity not required)
std::string render_dot(const CurveDocument& doc);

} // namespace logdegen::curveio
