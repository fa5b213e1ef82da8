#include "logdegen/curve_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace logdegen::curveio {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ParseError("unknown field \"" + it.key() + "\" in " + where);
}

long integer_field(const json& obj, const std::string& key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw ParseError(where + "." + key + ": expected an integer");
    return v.get<long>();
}

std::string string_field(const json& obj, const std::string& key, const std::string& where) {
    const json& v = obj.at(key);
    if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

CurveDocument parse_curve_document(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("top level: expected an object");
    reject_unknown_keys(j, {"components", "nodes"}, "the top-level object");
    if (!j.contains("components") || !j["components"].is_array())
        throw ParseError("components: expected an array");
    if (!j.contains("nodes") || !j["nodes"].is_array())
        throw ParseError("nodes: expected an array");

    CurveDocument doc;
    std::size_t i = 0;
    for (const json& c : j["components"]) {
        std::string where = "components[" + std::to_string(i++) + "]";
        if (!c.is_object()) throw ParseError(where + ": expected an object");
        reject_unknown_keys(c, {"id", "genus"}, where);
        if (!c.contains("id")) throw ParseError(where + ".id: required");
        if (!c.contains("genus")) throw ParseError(where + ".genus: required");
        doc.components.push_back(
            {string_field(c, "id", where), integer_field(c, "genus", where)});
    }
    i = 0;
    for (const json& n : j["nodes"]) {
        std::string where = "nodes[" + std::to_string(i++) + "]";
        if (!n.is_object()) throw ParseError(where + ": expected an object");
        reject_unknown_keys(n, {"id", "branches", "nu"}, where);
        if (!n.contains("id")) throw ParseError(where + ".id: required");
        CurveNode node;
        node.id = string_field(n, "id", where);
        if (!n.contains("branches") || !n["branches"].is_array() || n["branches"].size() != 2)
            throw ParseError(where + ".branches: expected exactly two component ids");
        for (int b = 0; b < 2; ++b) {
            const json& v = n["branches"][static_cast<std::size_t>(b)];
            if (!v.is_string())
                throw ParseError(where + ".branches: expected component id strings");
            node.branches[static_cast<std::size_t>(b)] = v.get<std::string>();
        }
        if (n.contains("nu")) node.nu = integer_field(n, "nu", where);
        doc.nodes.push_back(std::move(node));
    }
    return doc;
}

CurveDocument load_curve_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_document(buf.str());
}

degeneration::LogCurveData to_log_curve(const CurveDocument& doc) {
    if (doc.components.empty())
        throw SemanticError("components: at least one component required");
    std::map<std::string, std::size_t> vertex;
    for (std::size_t v = 0; v < doc.components.size(); ++v) {
        const auto& c = doc.components[v];
        if (!vertex.emplace(c.id, v).second)
            throw SemanticError("duplicate component id \"" + c.id + "\"");
        if (c.genus < 0)
            throw SemanticError("component \"" + c.id + "\": genus must be nonnegative");
    }
    std::set<std::string> node_ids;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::vector<long> nu;
    for (const auto& n : doc.nodes) {
        if (!node_ids.insert(n.id).second)
            throw SemanticError("duplicate node id \"" + n.id + "\"");
        if (n.nu < 1) throw SemanticError("node \"" + n.id + "\": nu must be at least 1");
        std::array<std::size_t, 2> ends{};
        for (int b = 0; b < 2; ++b) {
            auto it = vertex.find(n.branches[static_cast<std::size_t>(b)]);
            if (it == vertex.end())
                throw SemanticError("node \"" + n.id + "\": branch references unknown component \"" +
                                    n.branches[static_cast<std::size_t>(b)] + "\"");
            ends[static_cast<std::size_t>(b)] = it->second;
        }
        edges.emplace_back(ends[0], ends[1]);
        nu.push_back(n.nu);
    }
    std::vector<long> genus;
    for (const auto& c : doc.components) genus.push_back(c.genus);
    degeneration::DualGraph g = degeneration::graph_from_edges(doc.components.size(), edges);
    degeneration::Orientation o = degeneration::default_orientation(g);
    return degeneration::make_log_curve(std::move(g), std::move(genus), std::move(nu),
                                        std::move(o));
}

Report analyze(const CurveDocument& doc, long gamma_power) {
    degeneration::LogCurveData data = to_log_curve(doc);
    if (!degeneration::is_connected(data.graph))
        throw SemanticError("curve is disconnected; analyze requires a connected special fiber");
    Report r;
    for (const auto& c : doc.components) {
        r.vertex_labels.push_back(c.id);
        r.component_genus.push_back(c.genus);
    }
    for (const auto& n : doc.nodes) {
        r.edge_labels.push_back(n.id);
        r.node_nu.push_back(n.nu);
    }
    r.betti = degeneration::betti_report(data);
    r.euler_genus = degeneration::gluing_euler_oracle(data);
    r.pages = degeneration::spectral_sequence(data);
    r.monodromy = degeneration::picard_lefschetz(data, gamma_power);
    r.vanishing_basis = degeneration::vanishing_cocycle_basis(data);
    r.gamma_power = gamma_power;
    return r;
}

namespace {

void print_matrix(std::ostringstream& os, const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) {
        os << "  (" << m.rows << " x " << m.cols << " empty)\n";
        return;
    }
    for (std::size_t r = 0; r < m.rows; ++r) {
        os << "  [";
        for (std::size_t c = 0; c < m.cols; ++c) os << ' ' << m.at(r, c);
        os << " ]\n";
    }
}

json matrix_to_json(const IntMatrix& m) {
    json entries = json::array();
    for (const Int& x : m.entries) entries.push_back(x.str());
    return json{{"rows", m.rows}, {"cols", m.cols}, {"entries", entries}};
}

IntMatrix matrix_from_json(const json& j) {
    IntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    const json& entries = j.at("entries");
    if (entries.size() != m.entries.size())
        throw ParseError("matrix entries: wrong count");
    std::size_t i = 0;
    for (const json& e : entries) m.entries[i++] = Int(e.get<std::string>());
    return m;
}

json page_to_json(const std::array<std::array<long, 2>, 3>& page) {
    json out = json::array();
    for (const auto& col : page) out.push_back(json{col[0], col[1]});
    return out;
}

std::array<std::array<long, 2>, 3> page_from_json(const json& j) {
    std::array<std::array<long, 2>, 3> page{};
    if (!j.is_array() || j.size() != 3) throw ParseError("page: expected three columns");
    for (std::size_t p = 0; p < 3; ++p)
        for (std::size_t q = 0; q < 2; ++q) page[p][q] = j[p][q].get<long>();
    return page;
}

} // namespace

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "components        : " << r.vertex_labels.size() << "\n";
    os << "nodes             : " << r.edge_labels.size() << "\n";
    os << "component basis   :";
    for (std::size_t v = 0; v < r.vertex_labels.size(); ++v)
        os << (v ? "," : "") << ' ' << r.vertex_labels[v] << " (g=" << r.component_genus[v]
           << ")";
    os << "\n";
    os << "edge basis        :";
    if (r.edge_labels.empty()) os << " (none)";
    for (std::size_t e = 0; e < r.edge_labels.size(); ++e)
        os << (e ? "," : "") << ' ' << r.edge_labels[e] << " (nu=" << r.node_nu[e] << ")";
    os << "\n";
    os << "h1 graph          : " << r.betti.h1_graph << "\n";
    os << "h1 special fiber  : " << r.betti.h1_X << "\n";
    os << "h1 general fiber  : " << r.betti.h1_fiber << "\n";
    os << "genus             : " << r.betti.genus << "\n";
    os << "euler genus       : " << r.euler_genus << "\n";
    os << "E2 page (rows q=1,0; cols p=0,1,2)\n";
    os << "  [ " << r.pages.e2[0][1] << ' ' << r.pages.e2[1][1] << ' ' << r.pages.e2[2][1]
       << " ]\n";
    os << "  [ " << r.pages.e2[0][0] << ' ' << r.pages.e2[1][0] << ' ' << r.pages.e2[2][0]
       << " ]\n";
    os << "Einf page (rows q=1,0; cols p=0,1,2)\n";
    os << "  [ " << r.pages.einf[0][1] << ' ' << r.pages.einf[1][1] << ' '
       << r.pages.einf[2][1] << " ]\n";
    os << "  [ " << r.pages.einf[0][0] << ' ' << r.pages.einf[1][0] << ' '
       << r.pages.einf[2][0] << " ]\n";
    os << "d2 : E2^{0,1} -> E2^{2,0} (rows = components, cols = nodes)\n";
    print_matrix(os, r.pages.d2);
    os << "monodromy pairing on the cycle basis\n";
    print_matrix(os, r.monodromy.pairing_gram);
    os << "gamma power       : " << r.gamma_power << "\n";
    os << "basis blocks      : cocycle " << r.monodromy.basis_blocks[0] << " | component "
       << r.monodromy.basis_blocks[1] << " | cycle " << r.monodromy.basis_blocks[2] << "\n";
    os << "rho (monodromy on h^1 of the general fiber)\n";
    print_matrix(os, r.monodromy.rho);
    os << "N = rho - id\n";
    print_matrix(os, r.monodromy.N);
    os << "unipotency index  : " << r.monodromy.unipotency_index << "\n";
    os << "vanishing cocycle basis (rows = nodes, cols = h1 graph)\n";
    print_matrix(os, r.vanishing_basis);
    return os.str();
}

std::string render_json(const Report& r) {
    json j;
    j["basis"] = {{"components", r.vertex_labels},
                  {"nodes", r.edge_labels},
                  {"genus", r.component_genus},
                  {"nu", r.node_nu}};
    j["betti"] = {{"h1_graph", r.betti.h1_graph},
                  {"h1_special", r.betti.h1_X},
                  {"h1_general", r.betti.h1_fiber},
                  {"genus", r.betti.genus}};
    j["euler_genus"] = r.euler_genus;
    j["gamma_power"] = r.gamma_power;
    j["pages"] = {{"e2", page_to_json(r.pages.e2)},
                  {"einf", page_to_json(r.pages.einf)},
                  {"d2", matrix_to_json(r.pages.d2)},
                  {"h1_general", r.pages.h1_general_fiber},
                  {"genus", r.pages.genus}};
    j["monodromy"] = {{"gram", matrix_to_json(r.monodromy.pairing_gram)},
                      {"rho", matrix_to_json(r.monodromy.rho)},
                      {"n", matrix_to_json(r.monodromy.N)},
                      {"blocks", r.monodromy.basis_blocks},
                      {"unipotency", r.monodromy.unipotency_index}};
    j["vanishing_basis"] = matrix_to_json(r.vanishing_basis);
    return j.dump(2) + "\n";
}

Report parse_report_json(const std::string& json_text) {
    try {
        json j = json::parse(json_text);
        Report r;
        const json& basis = j.at("basis");
        r.vertex_labels = basis.at("components").get<std::vector<std::string>>();
        r.edge_labels = basis.at("nodes").get<std::vector<std::string>>();
        r.component_genus = basis.at("genus").get<std::vector<long>>();
        r.node_nu = basis.at("nu").get<std::vector<long>>();
        const json& betti = j.at("betti");
        r.betti.h1_graph = betti.at("h1_graph").get<long>();
        r.betti.h1_X = betti.at("h1_special").get<long>();
        r.betti.h1_fiber = betti.at("h1_general").get<long>();
        r.betti.genus = betti.at("genus").get<long>();
        r.euler_genus = j.at("euler_genus").get<long>();
        r.gamma_power = j.at("gamma_power").get<long>();
        const json& pages = j.at("pages");
        r.pages.e2 = page_from_json(pages.at("e2"));
        r.pages.einf = page_from_json(pages.at("einf"));
        r.pages.d2 = matrix_from_json(pages.at("d2"));
        r.pages.h1_general_fiber = pages.at("h1_general").get<long>();
        r.pages.genus = pages.at("genus").get<long>();
        const json& mono = j.at("monodromy");
        r.monodromy.pairing_gram = matrix_from_json(mono.at("gram"));
        r.monodromy.rho = matrix_from_json(mono.at("rho"));
        r.monodromy.N = matrix_from_json(mono.at("n"));
        r.monodromy.basis_blocks = mono.at("blocks").get<std::array<std::size_t, 3>>();
        r.monodromy.unipotency_index = mono.at("unipotency").get<int>();
        r.vanishing_basis = matrix_from_json(j.at("vanishing_basis"));
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

std::string render_dot(const CurveDocument& doc) {
    to_log_curve(doc); // validation only
    std::ostringstream os;
    os << "graph curve {\n";
    for (const auto& c : doc.components)
        os << "  \"" << dot_escape(c.id) << "\" [label=\"" << dot_escape(c.id) << " (g="
           << c.genus << ")\"];\n";
    for (const auto& n : doc.nodes)
        os << "  \"" << dot_escape(n.branches[0]) << "\" -- \"" << dot_escape(n.branches[1])
           << "\" [label=\"" << dot_escape(n.id) << " (nu=" << n.nu << ")\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace logdegen::curveio
