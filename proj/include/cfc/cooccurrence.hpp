#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cfc/graph.hpp"
#include "cfc/hypergraph.hpp"

namespace cfc {

/// t(e) in e for every hyperedge e; stored by edge index.
class RepresentativeFunction {
public:
    RepresentativeFunction() = default;
    RepresentativeFunction(const Hypergraph& h, std::vector<Vertex> reps);

    std::size_t size() const { return reps_.size(); }
    Vertex operator[](std::size_t e) const { return reps_.at(e); }
    const std::vector<Vertex>& values() const { return reps_; }

    /// Image of t, ascending and deduplicated.
    std::vector<Vertex> image() const;

    friend bool operator==(const RepresentativeFunction&, const RepresentativeFunction&) = default;

private:
    std::vector<Vertex> reps_;
};

/// Gamma_t: vertices are image(t); u ~ v iff some hyperedge e holds both with t(e) in {u, v}.
class CoOccurrenceGraph {
public:
    CoOccurrenceGraph(const Hypergraph& h, const RepresentativeFunction& t);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const SimpleGraph& graph() const { return graph_; }
    std::optional<std::size_t> index_of(Vertex v) const;

    /// Edges as (u, v) vertex pairs with u < v, ascending.
    std::vector<std::pair<Vertex, Vertex>> vertex_edges() const;

    /// Hyperedge indices represented by each vertex of Gamma_t.
    const std::vector<std::vector<std::size_t>>& represented() const { return represented_; }

private:
    std::vector<Vertex> vertices_;
    std::vector<std::vector<std::size_t>> represented_;
    SimpleGraph graph_;
};

inline CoOccurrenceGraph build_cooccurrence(const Hypergraph& h, const RepresentativeFunction& t) {
    return CoOccurrenceGraph(h, t);
}

/// Representatives keep their Gamma_t colour (palette compressed onto 1..chi, order of the
/// input colours preserved), all other vertices get 0. `proper` is indexed like gamma.vertices().
Colouring extend_colouring(const Hypergraph& h, const RepresentativeFunction& t, std::span<const int> proper);

struct ChiMinResult {
    RepresentativeFunction t_best;
    int chi_min = 0;
};

struct RepresentativeSearch {
    std::optional<RepresentativeFunction> t;
    std::uint64_t nodes = 0;
};

/// Depth-first search for a representative function with chi(Gamma_t) <= q. A choice is
/// rejected when the partial Gamma_t gains a clique of size q + 1 (Gamma_t only grows as more
/// hyperedges are assigned); the next hyperedge is the one with the fewest surviving choices,
/// and vertices already in the image are tried first. Leaves are checked with the exact
/// chromatic number.
RepresentativeSearch find_representative_function(const Hypergraph& h, int q, const GraphBudget& budget = {});

/// Number of representative functions, saturating at UINT64_MAX.
std::uint64_t representative_function_count(const Hypergraph& h);

/// The i-th representative function in lexicographic order (edge 0 most significant).
RepresentativeFunction representative_function_at(const Hypergraph& h, std::uint64_t index);

}  // namespace cfc
