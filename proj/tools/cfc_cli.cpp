#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "cfc/conflict_graph.hpp"
#include "cfc/cooccurrence.hpp"
#include "cfc/errors.hpp"
#include "cfc/graph.hpp"
#include "cfc/interval_solver.hpp"
#include "cfc/io.hpp"
#include "cfc/oracles.hpp"

namespace {

using cfc::io::Json;

constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Globals {
    std::string config;
    std::uint64_t seed = 0;
};

cfc::io::Budgets load_budgets(const Globals& g) {
    if (g.config.empty()) return {};
    return cfc::io::budgets_from_json(cfc::io::parse_json(cfc::io::read_text(g.config), g.config));
}

cfc::io::Instance load_instance(const std::string& path) {
    return cfc::io::instance_from_json(cfc::io::parse_json(cfc::io::read_text(path), path));
}

Json load_json(const std::string& path) { return cfc::io::parse_json(cfc::io::read_text(path), path); }

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

class OutputFile {
public:
    explicit OutputFile(const std::string& path) {
        if (path.empty()) return;
        file_.open(path);
        if (!file_) throw cfc::InputError("cannot open " + path + " for writing");
    }
    std::ostream* get() { return file_.is_open() ? &file_ : nullptr; }

private:
    std::ofstream file_;
};

int run_solve(const Globals& g, const std::string& path, const std::string& lp_trace, const std::string& rounding_trace) {
    const auto budgets = load_budgets(g);
    const auto inst = load_instance(path);
    OutputFile lp_out(lp_trace), rounding_out(rounding_trace);
    cfc::SolverOptions options;
    options.lp = budgets.lp;
    options.graph = budgets.graph;
    options.lp_trace = lp_out.get();
    options.rounding_trace = rounding_out.get();
    print(cfc::io::result_to_json(cfc::solve(inst.require_intervals(), options)));
    return 0;
}

int run_verify(const std::string& path, const std::string& colouring_path) {
    const auto inst = load_instance(path);
    const auto& h = inst.hypergraph;
    const auto c = cfc::io::colouring_from_json(load_json(colouring_path), h.num_vertices());
    const auto report = cfc::verify_cf(h, c);
    Json j;
    j["is_cf"] = report.is_cf;
    j["colours_used"] = c.colours_used();
    if (auto bad = report.first_failing_edge())
        j["failing_edge"] = *bad;
    else
        j["failing_edge"] = nullptr;
    print(j);
    return report.is_cf ? 0 : 1;
}

int run_oracle(const Globals& g, const std::string& which, const std::string& path, int n_max, int m_max, bool general) {
    const auto budgets = load_budgets(g);
    Json j;
    if (which == "random") {
        if (n_max < 1 || m_max < 1) throw cfc::InputError("--n-max and --m-max must be positive");
        print(general ? cfc::io::instance_to_json(cfc::random_hypergraph(n_max, m_max, g.seed))
                      : cfc::io::instance_to_json(cfc::random_interval_hypergraph(n_max, m_max, g.seed)));
        return 0;
    }
    if (path.empty()) throw cfc::InputError("oracle " + which + " needs an instance file");
    const auto inst = load_instance(path);
    const auto& h = inst.hypergraph;
    if (which == "chi-cf") {
        j["chi_cf"] = cfc::chi_cf_bruteforce(h, budgets.oracle);
    } else if (which == "ehs-partition") {
        const auto p = cfc::min_ehs_partition_bruteforce(h, budgets.oracle);
        j["parts"] = p.parts;
        std::vector<cfc::EhsPart> parts;
        for (std::size_t i = 0; i < p.edge_sets.size(); ++i) parts.push_back({p.edge_sets[i], p.hitting_sets[i]});
        j["partition"] = cfc::io::parts_to_json(parts)["parts"];
    } else if (which == "chi-min") {
        const auto r = cfc::chi_min_bruteforce(h, budgets.oracle);
        j["chi_min"] = r.chi_min;
        j["t"] = r.t_best.values();
    } else {
        throw cfc::InputError("unknown oracle " + which);
    }
    print(j);
    return 0;
}

int run_reduce_mis(const std::string& path, int k) {
    const auto inst = load_instance(path);
    const cfc::ConflictGraph gk(inst.hypergraph, k);
    cfc::io::write_conflict_complement_dimacs(std::cout, gk);
    return 0;
}

int run_cooccurrence(const Globals& g, const std::string& path, const std::string& t_path, bool dot) {
    const auto budgets = load_budgets(g);
    const auto inst = load_instance(path);
    const auto& h = inst.hypergraph;
    const auto t = cfc::io::representative_from_json(load_json(t_path), h);
    const cfc::CoOccurrenceGraph gamma(h, t);
    if (dot) {
        cfc::io::write_cooccurrence_dot(std::cout, gamma);
        return 0;
    }
    const auto colouring = cfc::chromatic_number_exact(gamma.graph(), budgets.graph);
    Json j;
    j["vertices"] = gamma.vertices();
    j["edges"] = Json::array();
    for (const auto& [u, v] : gamma.vertex_edges()) j["edges"].push_back({u, v});
    j["chi"] = colouring.chi;
    j["clique_number"] = cfc::max_clique(gamma.graph(), budgets.graph).size();
    j["colouring"] = cfc::io::colouring_to_json(cfc::extend_colouring(h, t, colouring.colour));
    print(j);
    return 0;
}

int run_check_berge(const Globals& g, const std::string& path, int max_len) {
    const auto budgets = load_budgets(g);
    std::istringstream in(cfc::io::read_text(path));
    const auto graph = cfc::io::read_dimacs(in, path);
    const int cap = max_len > 0 ? max_len : static_cast<int>(graph.order());
    const auto report = cfc::is_berge(graph, cap, budgets.graph);
    Json j;
    j["is_berge"] = report.is_berge;
    j["max_len"] = cap;
    Json cert = Json::array();
    for (std::size_t v : report.certificate) cert.push_back(v + 1);
    j["certificate"] = cert;
    j["antihole"] = report.antihole;
    print(j);
    return report.is_berge ? 0 : 1;
}

int run_partition(const Globals& g, const std::string& path, const std::string& direction, const std::string& input) {
    const auto budgets = load_budgets(g);
    const auto inst = load_instance(path);
    const auto& h = inst.hypergraph;
    if (direction == "to-parts") {
        const auto c = cfc::io::colouring_from_json(load_json(input), h.num_vertices());
        print(cfc::io::parts_to_json(cfc::partition_from_colouring(h, c)));
    } else if (direction == "to-colouring") {
        const auto parts = cfc::io::parts_from_json(load_json(input));
        const auto c = cfc::colouring_from_partition(inst.require_intervals(), parts, budgets.graph);
        Json j;
        j["colours_used"] = c.colours_used();
        j["colouring"] = cfc::io::colouring_to_json(c);
        print(j);
    } else {
        throw cfc::InputError("--direction must be to-parts or to-colouring");
    }
    return 0;
}

int run_bench(const Globals& g, const std::string& corpus, int count, int n_max, int m_max) {
    const auto budgets = load_budgets(g);
    std::vector<std::pair<std::string, cfc::IntervalHypergraph>> instances;
    if (!corpus.empty()) {
        const auto j = load_json(corpus);
        const Json& list = j.is_object() && j.contains("instances") ? j.at("instances") : j;
        if (!list.is_array()) throw cfc::InputError(corpus + ": expected an array of instances");
        for (std::size_t i = 0; i < list.size(); ++i)
            instances.emplace_back(std::to_string(i), cfc::io::instance_from_json(list[i]).require_intervals());
    } else {
        if (count < 1 || n_max < 1 || m_max < 1) throw cfc::InputError("--count, --n-max and --m-max must be positive");
        for (int i = 0; i < count; ++i) {
            const auto seed = g.seed + static_cast<std::uint64_t>(i);
            instances.emplace_back("seed" + std::to_string(seed), cfc::random_interval_hypergraph(n_max, m_max, seed));
        }
    }
    cfc::SolverOptions options;
    options.lp = budgets.lp;
    options.graph = budgets.graph;
    std::cout << "instance,chi_cf,branch,q_min,wall_ms\n";
    for (const auto& [name, ih] : instances) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = cfc::solve(ih, options);
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        std::cout << name << ',' << r.chi_cf << ',' << cfc::to_string(r.branch) << ',';
        if (const auto* lp = std::get_if<cfc::LpCertificate>(&r.certificate)) std::cout << lp->q_min;
        std::cout << ',' << std::fixed << std::setprecision(3) << elapsed.count() << '\n';
        std::cout.unsetf(std::ios::floatfield);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact conflict-free colouring of hypergraphs"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--config", g.config, "Budgets JSON file")->check(CLI::ExistingFile);
    app.add_option("--seed", g.seed, "Seed for randomised commands");

    std::string instance, second, lp_trace, rounding_trace, which, direction, corpus;
    int k = 1, max_len = 0, n_max = 12, m_max = 8, count = 100;
    bool dot = false, general = false;

    auto* solve = app.add_subcommand("solve", "Minimum CF colouring of an interval hypergraph");
    solve->add_option("instance", instance, "Instance JSON or -")->required();
    solve->add_option("--lp-trace", lp_trace, "Write one line per clique cut");
    solve->add_option("--rounding-trace", rounding_trace, "Write one line per rounding iteration");

    auto* verify = app.add_subcommand("verify", "Check a colouring; exit 0 if conflict-free, 1 otherwise");
    verify->add_option("instance", instance)->required();
    verify->add_option("colouring", second)->required();

    auto* oracle = app.add_subcommand("oracle", "Brute-force reference values");
    oracle->add_option("which", which, "chi-cf | ehs-partition | chi-min | random")
        ->required()
        ->check(CLI::IsMember({"chi-cf", "ehs-partition", "chi-min", "random"}));
    oracle->add_option("instance", instance);
    oracle->add_option("--n-max", n_max);
    oracle->add_option("--m-max", m_max);
    oracle->add_flag("--general", general, "random: general hypergraph instead of intervals");

    auto* reduce = app.add_subcommand("reduce-mis", "Complement of G_k in DIMACS");
    reduce->add_option("instance", instance)->required();
    reduce->add_option("--k", k, "Colour budget")->required();

    auto* cooc = app.add_subcommand("cooccurrence", "Co-occurrence graph of a representative function");
    cooc->add_option("instance", instance)->required();
    cooc->add_option("--t", second, "Representative function JSON")->required();
    cooc->add_flag("--dot", dot, "Emit DOT instead of JSON");

    auto* berge = app.add_subcommand("check-berge", "Odd hole / antihole search; exit 0 if Berge, 1 otherwise");
    berge->add_option("graph", instance, "DIMACS graph")->required();
    berge->add_option("--max-len", max_len, "Longest odd cycle length checked (default: graph order)");

    auto* part = app.add_subcommand("partition", "Convert between CF colourings and exactly hittable partitions");
    part->add_option("instance", instance)->required();
    part->add_option("--direction", direction, "to-parts | to-colouring")
        ->required()
        ->check(CLI::IsMember({"to-parts", "to-colouring"}));
    part->add_option("--input", second, "Colouring or parts JSON")->required();

    auto* bench = app.add_subcommand("bench", "Solve a corpus and write CSV timings");
    bench->add_option("--corpus", corpus, "JSON array of instances (default: seeded random instances)");
    bench->add_option("--count", count);
    bench->add_option("--n-max", n_max);
    bench->add_option("--m-max", m_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*solve) return run_solve(g, instance, lp_trace, rounding_trace);
        if (*verify) return run_verify(instance, second);
        if (*oracle) return run_oracle(g, which, instance, n_max, m_max, general);
        if (*reduce) return run_reduce_mis(instance, k);
        if (*cooc) return run_cooccurrence(g, instance, second, dot);
        if (*berge) return run_check_berge(g, instance, max_len);
        if (*part) return run_partition(g, instance, direction, second);
        if (*bench) return run_bench(g, corpus, count, n_max, m_max);
    } catch (const cfc::ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const cfc::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const cfc::ContractError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
