#include "cfc/io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "cfc/errors.hpp"

namespace cfc::io {

namespace {

long long integer(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
    return j.get<long long>();
}

int small_int(const Json& j, const std::string& where) {
    const long long v = integer(j, where);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw InputError(where + ": integer out of range");
    return static_cast<int>(v);
}

const Json& array(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array");
    return j;
}

std::vector<int> int_list(const Json& j, const std::string& where) {
    std::vector<int> out;
    const auto& a = array(j, where);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(small_int(a[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<std::size_t> index_list(const Json& j, const std::string& where) {
    std::vector<std::size_t> out;
    for (int v : int_list(j, where)) {
        if (v < 0) throw InputError(where + ": negative index");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

void reject_unknown(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key)) throw InputError(where + ": unknown key \"" + key + "\"");
}

template <class T>
void read_field(const Json& j, const char* key, T& target, const std::string& where) {
    if (!j.contains(key)) return;
    const long long v = integer(j.at(key), where + "." + key);
    if (v <= 0) throw InputError(where + "." + key + ": must be positive");
    target = static_cast<T>(v);
}

}  // namespace

std::string read_text(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + e.what());
    }
}

const IntervalHypergraph& Instance::require_intervals() const {
    if (!intervals) throw InputError("this command needs an interval instance (\"intervals\" key)");
    return *intervals;
}

Instance instance_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("instance: expected a JSON object");
    reject_unknown(j, {"n", "intervals", "edges"}, "instance");
    if (!j.contains("n")) throw InputError("instance: missing \"n\"");
    const int n = small_int(j.at("n"), "instance.n");
    if (n < 0) throw InputError("instance.n: must be non-negative");
    const bool has_iv = j.contains("intervals");
    const bool has_edges = j.contains("edges");
    if (has_iv == has_edges) throw InputError("instance: exactly one of \"intervals\" or \"edges\" is required");

    Instance inst;
    if (has_iv) {
        const auto& a = array(j.at("intervals"), "instance.intervals");
        std::vector<Interval> ivs;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const std::string where = "instance.intervals[" + std::to_string(i) + "]";
            const auto pair = int_list(a[i], where);
            if (pair.size() != 2) throw InputError(where + ": expected [l, r]");
            ivs.push_back({pair[0], pair[1]});
        }
        inst.intervals = IntervalHypergraph(n, std::move(ivs));
        inst.hypergraph = inst.intervals->to_hypergraph();
    } else {
        const auto& a = array(j.at("edges"), "instance.edges");
        std::vector<std::vector<Vertex>> edges;
        for (std::size_t i = 0; i < a.size(); ++i)
            edges.push_back(int_list(a[i], "instance.edges[" + std::to_string(i) + "]"));
        inst.hypergraph = Hypergraph(n, std::move(edges));
    }
    return inst;
}

Json instance_to_json(const IntervalHypergraph& ih) {
    Json j;
    j["n"] = ih.num_points();
    j["intervals"] = Json::array();
    for (const auto& iv : ih.intervals()) j["intervals"].push_back({iv.l, iv.r});
    return j;
}

Json instance_to_json(const Hypergraph& h) {
    Json j;
    j["n"] = h.num_vertices();
    j["edges"] = Json::array();
    for (const auto& e : h.edges()) j["edges"].push_back(e);
    return j;
}

Colouring colouring_from_json(const Json& j, int n) {
    const Json& x = (j.is_object() && j.contains("colouring")) ? j.at("colouring") : j;
    std::vector<int> colours(static_cast<std::size_t>(n), -1);
    if (x.is_array()) {
        if (x.size() != static_cast<std::size_t>(n))
            throw InputError("colouring: array has " + std::to_string(x.size()) + " entries, expected " + std::to_string(n));
        colours = int_list(x, "colouring");
    } else if (x.is_object()) {
        for (const auto& [key, value] : x.items()) {
            int v = 0;
            try {
                std::size_t used = 0;
                v = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw InputError("colouring: key \"" + key + "\" is not a vertex id");
            }
            if (v < 1 || v > n) throw InputError("colouring: vertex " + key + " outside 1.." + std::to_string(n));
            colours[static_cast<std::size_t>(v - 1)] = small_int(value, "colouring." + key);
        }
    } else {
        throw InputError("colouring: expected an object or an array");
    }
    for (std::size_t i = 0; i < colours.size(); ++i)
        if (colours[i] < 0) throw InputError("colouring: vertex " + std::to_string(i + 1) + " has no valid colour");
    return Colouring(std::move(colours));
}

Json colouring_to_json(const Colouring& c) {
    Json j = Json::object();
    for (Vertex v = 1; v <= c.num_vertices(); ++v) j[std::to_string(v)] = c[v];
    return j;
}

RepresentativeFunction representative_from_json(const Json& j, const Hypergraph& h) {
    const Json& x = (j.is_object() && j.contains("t")) ? j.at("t") : j;
    return RepresentativeFunction(h, int_list(x, "t"));
}

std::vector<EhsPart> parts_from_json(const Json& j) {
    const Json& x = (j.is_object() && j.contains("parts")) ? j.at("parts") : j;
    const auto& a = array(x, "parts");
    std::vector<EhsPart> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string where = "parts[" + std::to_string(i) + "]";
        if (!a[i].is_object() || !a[i].contains("edges") || !a[i].contains("hitting_set"))
            throw InputError(where + ": expected {\"edges\": [...], \"hitting_set\": [...]}");
        out.push_back({index_list(a[i].at("edges"), where + ".edges"), int_list(a[i].at("hitting_set"), where + ".hitting_set")});
    }
    return out;
}

Json parts_to_json(const std::vector<EhsPart>& parts) {
    Json j;
    j["parts"] = Json::array();
    for (const auto& p : parts) j["parts"].push_back({{"edges", p.edges}, {"hitting_set", p.hitting_set}});
    return j;
}

Json result_to_json(const CFCResult& r) {
    Json j;
    j["chi_cf"] = r.chi_cf;
    j["branch"] = std::string(to_string(r.branch));
    j["colouring"] = colouring_to_json(r.colouring);
    Json cert = Json::object();
    if (const auto* hs = std::get_if<HittingSetCertificate>(&r.certificate)) {
        cert["hitting_set"] = hs->hitting_set;
    } else if (const auto* pc = std::get_if<PiercingCertificate>(&r.certificate)) {
        cert["piercing_points"] = pc->points;
    } else if (const auto* lp = std::get_if<LpCertificate>(&r.certificate)) {
        cert["q_min"] = lp->q_min;
        cert["t"] = lp->t.values();
        Json gamma;
        gamma["vertices"] = lp->gamma_vertices;
        gamma["edges"] = Json::array();
        for (const auto& [u, v] : lp->gamma_edges) gamma["edges"].push_back({u, v});
        gamma["clique_number"] = lp->gamma_clique_number;
        cert["gamma"] = std::move(gamma);
        cert["cuts"] = lp->cuts;
        cert["rounding_iterations"] = lp->rounding_iterations;
        cert["lp_integral"] = lp->lp_integral;
        cert["rounding"] = std::string(to_string(lp->rounding));
        cert["integral_search_nodes"] = lp->integral_search_nodes;
    }
    j["certificate"] = std::move(cert);
    return j;
}

Budgets budgets_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("config: expected a JSON object");
    reject_unknown(j, {"graph", "oracle", "lp"}, "config");
    Budgets b;
    if (j.contains("graph")) {
        const auto& g = j.at("graph");
        reject_unknown(g, {"max_search_order", "max_exact_order", "max_branch_nodes", "max_cliques"}, "config.graph");
        read_field(g, "max_search_order", b.graph.max_search_order, "config.graph");
        read_field(g, "max_exact_order", b.graph.max_exact_order, "config.graph");
        read_field(g, "max_branch_nodes", b.graph.max_branch_nodes, "config.graph");
        read_field(g, "max_cliques", b.graph.max_cliques, "config.graph");
    }
    if (j.contains("oracle")) {
        const auto& o = j.at("oracle");
        reject_unknown(o, {"max_vertices", "max_edges", "max_colour_budget", "max_states"}, "config.oracle");
        read_field(o, "max_vertices", b.oracle.max_vertices, "config.oracle");
        read_field(o, "max_edges", b.oracle.max_edges, "config.oracle");
        read_field(o, "max_colour_budget", b.oracle.max_colour_budget, "config.oracle");
        read_field(o, "max_states", b.oracle.max_states, "config.oracle");
    }
    if (j.contains("lp")) {
        const auto& l = j.at("lp");
        reject_unknown(l, {"max_cuts", "max_pivots"}, "config.lp");
        read_field(l, "max_cuts", b.lp.max_cuts, "config.lp");
        read_field(l, "max_pivots", b.lp.simplex.max_pivots, "config.lp");
    }
    b.lp.graph = b.graph;
    return b;
}

SimpleGraph read_dimacs(std::istream& in, const std::string& source) {
    std::string line;
    std::size_t lineno = 0;
    std::optional<SimpleGraph> g;
    std::size_t declared = 0;
    std::size_t seen = 0;
    auto fail = [&](const std::string& msg) -> InputError {
        return InputError(source + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string format;
            long long nodes = -1;
            long long edges = -1;
            if (g) throw fail("duplicate problem line");
            if (!(ls >> format >> nodes >> edges) || (format != "edge" && format != "col") || nodes < 0 || edges < 0)
                throw fail("expected \"p edge <nodes> <edges>\"");
            g = SimpleGraph(static_cast<std::size_t>(nodes));
            declared = static_cast<std::size_t>(edges);
        } else if (tag == "e") {
            if (!g) throw fail("edge before problem line");
            long long u = 0;
            long long v = 0;
            std::string extra;
            if (!(ls >> u >> v) || (ls >> extra)) throw fail("expected \"e <u> <v>\"");
            if (u < 1 || v < 1 || static_cast<std::size_t>(u) > g->order() || static_cast<std::size_t>(v) > g->order())
                throw fail("node id out of range");
            if (u == v) throw fail("self-loop");
            g->add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
            ++seen;
        } else {
            throw fail("unknown line type \"" + tag + "\"");
        }
    }
    if (!g) throw InputError(source + ": missing problem line");
    if (seen != declared)
        throw InputError(source + ": problem line declares " + std::to_string(declared) + " edges, found " +
                         std::to_string(seen));
    return *g;
}

void write_dimacs(std::ostream& os, const SimpleGraph& g, const std::vector<std::string>& comments) {
    for (const auto& c : comments) os << "c " << c << '\n';
    const auto edges = g.edges();
    os << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) os << "e " << u + 1 << ' ' << v + 1 << '\n';
}

void write_conflict_complement_dimacs(std::ostream& os, const ConflictGraph& g) {
    std::vector<std::string> comments;
    comments.push_back("complement of the conflict graph G_" + std::to_string(g.colour_budget()) +
                       "; maximum cliques here are maximum independent sets of G_k");
    comments.push_back("k=" + std::to_string(g.colour_budget()) + " m=" + std::to_string(g.hypergraph().num_edges()));
    for (std::size_t i = 0; i < g.order(); ++i) {
        const auto& node = g.node(i);
        std::string label = "node " + std::to_string(i + 1) + " e=" + std::to_string(node.edge_index) +
                            " v=" + std::to_string(node.vertex);
        if (g.colour_budget() > 1) label += " c=" + std::to_string(node.colour);
        comments.push_back(std::move(label));
    }
    write_dimacs(os, g.graph().complement(), comments);
}

void write_dot(std::ostream& os, const SimpleGraph& g, const std::string& name) {
    os << "graph " << name << " {\n";
    for (std::size_t v = 0; v < g.order(); ++v) os << "  " << v + 1 << ";\n";
    for (const auto& [u, v] : g.edges()) os << "  " << u + 1 << " -- " << v + 1 << ";\n";
    os << "}\n";
}

void write_cooccurrence_dot(std::ostream& os, const CoOccurrenceGraph& gamma) {
    os << "graph cooccurrence {\n";
    for (std::size_t i = 0; i < gamma.vertices().size(); ++i) {
        os << "  v" << gamma.vertices()[i] << " [label=\"" << gamma.vertices()[i] << "\\nrepresents:";
        for (std::size_t e : gamma.represented()[i]) os << ' ' << e;
        os << "\"];\n";
    }
    for (const auto& [u, v] : gamma.vertex_edges()) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
}

}  // namespace cfc::io
