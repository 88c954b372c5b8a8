#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cfc {

/// Vertices are the integers 1..n.
using Vertex = int;

/// A hypergraph on vertices 1..n with an ordered list of non-empty hyperedges.
///
/// Edge order is part of the identity of an instance: edge indices are used by the
/// conflict graph, representative functions and the LP. Duplicate hyperedges are kept
/// as distinct edges. Each hyperedge is stored sorted and without repeated vertices.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n, std::vector<std::vector<Vertex>> edges);

    int num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<Vertex>& edge(std::size_t i) const { return edges_.at(i); }
    const std::vector<std::vector<Vertex>>& edges() const { return edges_; }

    bool contains(std::size_t e, Vertex v) const;

    /// Sum of the hyperedge sizes; the number of nodes of the conflict graph G_1.
    std::size_t incidence_size() const;

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> edges_;
};

struct Interval {
    Vertex l = 1;
    Vertex r = 1;

    bool contains(Vertex v) const { return l <= v && v <= r; }
    int length() const { return r - l + 1; }
    bool intersects(const Interval& o) const { return l <= o.r && o.l <= r; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Hypergraph whose hyperedges are ranges {l, l+1, ..., r} of the points 1..n.
class IntervalHypergraph {
public:
    IntervalHypergraph() = default;
    IntervalHypergraph(int n, std::vector<Interval> intervals);

    int num_points() const { return n_; }
    std::size_t size() const { return intervals_.size(); }
    bool empty() const { return intervals_.empty(); }
    const Interval& interval(std::size_t i) const { return intervals_.at(i); }
    const std::vector<Interval>& intervals() const { return intervals_; }

    Hypergraph to_hypergraph() const;

    /// All n(n+1)/2 intervals on n points, ordered by (l, r).
    static IntervalHypergraph discrete(int n);

private:
    int n_ = 0;
    std::vector<Interval> intervals_;
};

/// Vertex colouring with palette {0, 1, ..., k}; colour 0 never witnesses a hyperedge.
class Colouring {
public:
    Colouring() = default;
    /// colours[i] is the colour of vertex i + 1.
    explicit Colouring(std::vector<int> colours);

    static Colouring zeros(int n) { return Colouring(std::vector<int>(static_cast<std::size_t>(n), 0)); }

    int num_vertices() const { return static_cast<int>(colours_.size()); }
    int operator[](Vertex v) const { return colours_.at(static_cast<std::size_t>(v - 1)); }
    void set(Vertex v, int colour);

    /// Largest colour in use (the k of the palette {0..k}).
    int max_colour() const;
    /// Number of distinct non-zero colours actually used.
    int colours_used() const;
    /// Vertices with the given colour, ascending.
    std::vector<Vertex> colour_class(int colour) const;

    const std::vector<int>& values() const { return colours_; }

    friend bool operator==(const Colouring&, const Colouring&) = default;

private:
    std::vector<int> colours_;
};

struct CFReport {
    bool is_cf = false;
    /// Least vertex whose colour is non-zero and unique in the edge, per edge.
    std::vector<std::optional<Vertex>> witnesses;

    std::optional<std::size_t> first_failing_edge() const;
};

CFReport verify_cf(const Hypergraph& h, const Colouring& c);

bool is_exact_hitting_set(const Hypergraph& h, std::span<const Vertex> s);

struct DisjointIntervals {
    std::size_t count = 0;
    /// Indices into the interval list, in sweep order.
    std::vector<std::size_t> witness;
};

/// Maximum set of pairwise disjoint intervals by the right-endpoint greedy sweep.
DisjointIntervals max_disjoint_intervals(const IntervalHypergraph& ih);

/// Minimum set of points piercing every interval; only defined when at most two
/// intervals are pairwise disjoint.
std::vector<Vertex> clique_cover_points(const IntervalHypergraph& ih);

/// Same sweep without the two-point precondition.
std::vector<Vertex> piercing_points(const IntervalHypergraph& ih);

}  // namespace cfc
