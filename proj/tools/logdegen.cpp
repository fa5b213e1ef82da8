// Command line front end: analyze a curve file, dump its dual graph as DOT,
// or run the seeded self-check suites.

#include "logdegen/curve_io.hpp"
#include "logdegen/verify.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"logdegen: exact invariants of one-parameter nodal degenerations"};
    app.require_subcommand(1);
    app.footer(
        "The order of the two entries in a node's \"branches\" array orients the\n"
        "corresponding edge of the dual graph: its incidence column is (first\n"
        "component) - (second component). All scalar invariants are independent of\n"
        "these choices; printed matrices live in the bases the orientation fixes.");

    std::string analyze_file, analyze_format = "text";
    long gamma = 1;
    CLI::App* analyze = app.add_subcommand("analyze", "compute the invariant report of a curve");
    analyze->add_option("file", analyze_file, "curve description (JSON)")->required();
    analyze->add_option("--format", analyze_format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    analyze->add_option("--gamma", gamma,
                        "report the monodromy of this power of the canonical generator");

    std::string graph_file, dot_path;
    CLI::App* graph = app.add_subcommand("graph", "write the dual graph in DOT format");
    graph->add_option("file", graph_file, "curve description (JSON)")->required();
    graph->add_option("--dot", dot_path, "output path for the DOT file")->required();

    std::string suite;
    std::size_t trials = 25;
    std::uint64_t seed = 1729;
    CLI::App* verify = app.add_subcommand("verify", "run seeded self-check suites");
    verify
        ->add_option("--suite", suite,
                     "one of zlin, complexes, koszul, symalg, monoid, graph, degeneration, all")
        ->required();
    verify->add_option("--trials", trials, "randomized rounds per property");
    verify->add_option("--seed", seed, "base seed for the generators");

    int rc = 0;

    analyze->callback([&] {
        logdegen::curveio::CurveDocument doc = logdegen::curveio::load_curve_document(analyze_file);
        logdegen::curveio::Report rep = logdegen::curveio::analyze(doc, gamma);
        if (analyze_format == "json")
            std::cout << logdegen::curveio::render_json(rep);
        else
            std::cout << logdegen::curveio::render_text(rep);
    });

    graph->callback([&] {
        logdegen::curveio::CurveDocument doc = logdegen::curveio::load_curve_document(graph_file);
        std::string dot = logdegen::curveio::render_dot(doc);
        std::ofstream out(dot_path);
        if (!out) throw std::runtime_error("cannot open " + dot_path + " for writing");
        out << dot;
        if (!out.good()) throw std::runtime_error("failed writing " + dot_path);
    });

    verify->callback([&] {
        std::vector<logdegen::verify::SuiteResult> results =
            logdegen::verify::run_suites(suite, trials, seed);
        std::cout << logdegen::verify::format_results(results);
        if (!logdegen::verify::all_passed(results)) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // --help is a success, bad usage is not
    } catch (const logdegen::curveio::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const logdegen::curveio::SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
