#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cfc/conflict_graph.hpp"
#include "cfc/cooccurrence.hpp"
#include "cfc/graph.hpp"
#include "cfc/hypergraph.hpp"
#include "cfc/interval_solver.hpp"
#include "cfc/lp_solver.hpp"
#include "cfc/oracles.hpp"

namespace cfc::io {

using Json = nlohmann::ordered_json;

/// Reads a file, or standard input when path is "-".
std::string read_text(const std::string& path);

/// Parses JSON; syntax errors become InputError "<source>:<line>:<column>: ...".
Json parse_json(const std::string& text, const std::string& source);

/// A parsed instance: every instance has the general form, interval instances also
/// keep their interval list.
struct Instance {
    Hypergraph hypergraph;
    std::optional<IntervalHypergraph> intervals;

    const IntervalHypergraph& require_intervals() const;
};

/// {"n": <int>, "intervals": [[l,r],...]} or {"n": <int>, "edges": [[v,...],...]}.
Instance instance_from_json(const Json& j);
Json instance_to_json(const IntervalHypergraph& ih);
Json instance_to_json(const Hypergraph& h);

/// Accepts {"colouring": X} or X, where X is an object {"<vertex>": colour} covering
/// every vertex 1..n, or an array of n colours.
Colouring colouring_from_json(const Json& j, int n);
Json colouring_to_json(const Colouring& c);

/// {"t": [v_0, v_1, ...]} indexed by hyperedge, or the bare array.
RepresentativeFunction representative_from_json(const Json& j, const Hypergraph& h);

/// {"parts": [{"edges": [...], "hitting_set": [...]}, ...]}
std::vector<EhsPart> parts_from_json(const Json& j);
Json parts_to_json(const std::vector<EhsPart>& parts);

Json result_to_json(const CFCResult& r);

/// Budgets file: {"graph": {...}, "oracle": {...}, "lp": {...}}; missing keys keep defaults.
struct Budgets {
    GraphBudget graph;
    OracleBudget oracle;
    LPBudget lp;
};
Budgets budgets_from_json(const Json& j);

/// DIMACS "p edge" format with 1-based node ids.
SimpleGraph read_dimacs(std::istream& in, const std::string& source);
void write_dimacs(std::ostream& os, const SimpleGraph& g, const std::vector<std::string>& comments = {});

/// Complement of G_k in DIMACS with "c node <id> e=<edge> v=<vertex>[ c=<colour>]" labels;
/// the colour field is omitted when k = 1.
void write_conflict_complement_dimacs(std::ostream& os, const ConflictGraph& g);

void write_dot(std::ostream& os, const SimpleGraph& g, const std::string& name);
void write_cooccurrence_dot(std::ostream& os, const CoOccurrenceGraph& gamma);

}  // namespace cfc::io
