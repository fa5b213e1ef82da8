#include "doctest.h"

#include <string>
#include <vector>

#include "logdegen/curve_io.hpp"

using namespace logdegen;
using namespace logdegen::curveio;

namespace {

std::string fixture(const std::string& name) {
    return std::string(LOGDEGEN_FIXTURE_DIR) + "/" + name;
}

template <typename E, typename F>
std::string message_of(F&& f) {
    try {
        f();
    } catch (const E& e) {
        return e.what();
    }
    return "";
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

} // namespace

TEST_CASE("nodal cubic end to end") {
    CurveDocument doc = load_curve_document(fixture("nodal_cubic.json"));
    REQUIRE(doc.components.size() == 1);
    REQUIRE(doc.nodes.size() == 1);
    CHECK(doc.nodes[0].nu == 1);

    Report r = analyze(doc);
    CHECK(r.betti.genus == 1);
    CHECK(r.euler_genus == 1);
    CHECK(r.monodromy.pairing_gram == IntMatrix{{1}});
    CHECK(r.monodromy.rho == IntMatrix{{1, -1}, {0, 1}});
    CHECK(r.vanishing_basis.rows == 1);
    CHECK(r.vanishing_basis.cols == 1);

    std::string text = render_text(r);
    CHECK(text.find("genus             : 1") != std::string::npos);
    CHECK(text.find("unipotency index  : 2") != std::string::npos);
    CHECK(text.find("n0 (nu=1)") != std::string::npos);
    // deterministic byte output
    CHECK(text == render_text(analyze(doc)));
}

TEST_CASE("fixture corpus analyzes with consistent genus") {
    const std::vector<std::pair<std::string, long>> expected = {
        {"nodal_cubic.json", 1}, {"i2.json", 1},           {"i3.json", 1},
        {"i4.json", 1},          {"i5.json", 1},           {"theta.json", 2},
        {"smooth_g2.json", 2},   {"banana_mixed.json", 3}, {"genus_mix.json", 5},
        {"tree.json", 1},        {"chain_loops.json", 6},
    };
    for (const auto& [name, genus] : expected) {
        CAPTURE(name);
        Report r = analyze(load_curve_document(fixture(name)));
        CHECK(r.betti.genus == genus);
        CHECK(r.euler_genus == genus);
        CHECK(2 * r.betti.genus == r.betti.h1_fiber);
        CHECK(r.pages.einf[0][1] == r.betti.h1_graph);
        CHECK(r.pages.einf[2][0] == 1);
    }
}

TEST_CASE("structural errors name the offending field") {
    CHECK_THROWS_AS(parse_curve_document("not json"), ParseError);
    CHECK_THROWS_AS(parse_curve_document("[1,2]"), ParseError);
    CHECK_THROWS_AS(load_curve_document(fixture("no_such_file.json")), ParseError);

    std::string msg = message_of<ParseError>([] {
        parse_curve_document(R"({"components": [], "nodes": [], "markings": []})");
    });
    CHECK(msg.find("markings") != std::string::npos);

    msg = message_of<ParseError>([] {
        parse_curve_document(R"({"components": [{"id": "a", "genus": 0, "color": 3}], "nodes": []})");
    });
    CHECK(msg.find("color") != std::string::npos);
    CHECK(msg.find("components[0]") != std::string::npos);

    msg = message_of<ParseError>([] {
        parse_curve_document(R"({"components": [{"id": "a", "genus": "two"}], "nodes": []})");
    });
    CHECK(msg.find("components[0].genus") != std::string::npos);

    msg = message_of<ParseError>([] {
        parse_curve_document(
            R"({"components": [{"id": "a", "genus": 0}], "nodes": [{"id": "n", "branches": ["a"]}]})");
    });
    CHECK(msg.find("nodes[0].branches") != std::string::npos);

    // fractional nu is a type error, not a range error
    CHECK_THROWS_AS(
        parse_curve_document(
            R"({"components": [{"id": "a", "genus": 0}], "nodes": [{"id": "n", "branches": ["a", "a"], "nu": 1.5}]})"),
        ParseError);
    CHECK_THROWS_AS(
        parse_curve_document(R"({"components": [{"genus": 0}], "nodes": []})"), ParseError);
}

TEST_CASE("semantic errors cite the ids involved") {
    CurveDocument bad = load_curve_document(fixture("bad_reference.json"));
    std::string msg = message_of<SemanticError>([&] { to_log_curve(bad); });
    CHECK(msg.find("n0") != std::string::npos);
    CHECK(msg.find("c9") != std::string::npos);

    auto parse = [](const char* text) { return parse_curve_document(text); };
    CHECK_THROWS_AS(
        to_log_curve(parse(
            R"({"components": [{"id": "a", "genus": 0}, {"id": "a", "genus": 1}], "nodes": []})")),
        SemanticError);
    CHECK_THROWS_AS(
        to_log_curve(parse(
            R"({"components": [{"id": "a", "genus": 0}], "nodes": [{"id": "n", "branches": ["a", "a"]}, {"id": "n", "branches": ["a", "a"]}]})")),
        SemanticError);
    msg = message_of<SemanticError>([&] {
        to_log_curve(parse(
            R"({"components": [{"id": "a", "genus": 0}], "nodes": [{"id": "n", "branches": ["a", "a"], "nu": 0}]})"));
    });
    CHECK(msg.find("nu") != std::string::npos);
    CHECK_THROWS_AS(
        to_log_curve(parse(R"({"components": [{"id": "a", "genus": -1}], "nodes": []})")),
        SemanticError);
    CHECK_THROWS_AS(to_log_curve(parse(R"({"components": [], "nodes": []})")), SemanticError);
}

TEST_CASE("disconnected curves: analysis refuses, graph output does not") {
    CurveDocument doc = load_curve_document(fixture("disconnected.json"));
    CHECK_THROWS_AS(analyze(doc), SemanticError);
    std::string dot = render_dot(doc);
    CHECK(dot.find("\"left\"") != std::string::npos);
    CHECK(dot.find("\"right\"") != std::string::npos);
}

TEST_CASE("json report round trip") {
    for (const char* name : {"nodal_cubic.json", "theta.json", "smooth_g2.json",
                             "genus_mix.json", "chain_loops.json"}) {
        CAPTURE(name);
        Report r = analyze(load_curve_document(fixture(name)), 2);
        Report back = parse_report_json(render_json(r));
        CHECK(back == r);
        CHECK(render_json(back) == render_json(r));
    }
    CHECK_THROWS_AS(parse_report_json("{}"), ParseError);
}

TEST_CASE("dot rendering") {
    std::string dot = render_dot(load_curve_document(fixture("theta.json")));
    CHECK(count_occurrences(dot, "--") == 3);
    CHECK(count_occurrences(dot, "[label=\"") == 5); // 2 vertices + 3 edges
    CHECK(dot.find("\"top\" -- \"bottom\"") != std::string::npos);
    CHECK(dot.find("(g=0)") != std::string::npos);
    CHECK(dot.find("(nu=1)") != std::string::npos);

    dot = render_dot(load_curve_document(fixture("nodal_cubic.json")));
    CHECK(dot.find("\"c0\" -- \"c0\"") != std::string::npos);

    dot = render_dot(load_curve_document(fixture("smooth_g2.json")));
    CHECK(count_occurrences(dot, "--") == 0);
    CHECK(dot.find("(g=2)") != std::string::npos);

    // invalid documents are rejected before any output
    CHECK_THROWS_AS(render_dot(load_curve_document(fixture("bad_reference.json"))),
                    SemanticError);
}

TEST_CASE("branch order in the file is the orientation") {
    auto doc_fwd = parse_curve_document(
        R"({"components": [{"id": "a", "genus": 0}, {"id": "b", "genus": 0}],
            "nodes": [{"id": "n", "branches": ["a", "b"]}]})");
    auto doc_bwd = parse_curve_document(
        R"({"components": [{"id": "a", "genus": 0}, {"id": "b", "genus": 0}],
            "nodes": [{"id": "n", "branches": ["b", "a"]}]})");
    Report fwd = analyze(doc_fwd), bwd = analyze(doc_bwd);
    CHECK(fwd.pages.d2 == neg(bwd.pages.d2));
    CHECK(fwd.betti.genus == bwd.betti.genus);
    CHECK(fwd.pages.d2 == IntMatrix{{-1}, {1}}); // minus the boundary a - b
}
