#include "cfc/oracles.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <random>
#include <string>

#include "cfc/errors.hpp"
#include "cfc/graph.hpp"

namespace cfc {

namespace {

void check_size(const Hypergraph& h, const OracleBudget& budget) {
    if (h.num_vertices() > budget.max_vertices)
        throw ResourceError("oracle: " + std::to_string(h.num_vertices()) + " vertices exceed budget " +
                            std::to_string(budget.max_vertices));
    if (h.num_edges() > budget.max_edges)
        throw ResourceError("oracle: " + std::to_string(h.num_edges()) + " hyperedges exceed budget " +
                            std::to_string(budget.max_edges));
}

class StateCounter {
public:
    StateCounter(std::atomic<std::uint64_t>& shared, std::uint64_t limit) : shared_(shared), limit_(limit) {}
    ~StateCounter() { shared_.fetch_add(local_, std::memory_order_relaxed); }
    StateCounter(const StateCounter&) = delete;
    StateCounter& operator=(const StateCounter&) = delete;

    void tick() {
        if (++local_ < kBatch) return;
        const auto total = shared_.fetch_add(local_, std::memory_order_relaxed) + local_;
        local_ = 0;
        if (total > limit_) throw ResourceError("oracle: state budget of " + std::to_string(limit_) + " exhausted");
    }

private:
    static constexpr std::uint64_t kBatch = 4096;
    std::atomic<std::uint64_t>& shared_;
    std::uint64_t limit_;
    std::uint64_t local_ = 0;
};

// Depth-first search over canonical colourings of vertices 1..n. A hyperedge is checked as
// soon as its largest vertex is coloured.
class ColouringSearch {
public:
    ColouringSearch(const Hypergraph& h, int k) : h_(h), k_(k), colour_(static_cast<std::size_t>(h.num_vertices()) + 1, 0) {
        ending_.resize(colour_.size());
        for (std::size_t e = 0; e < h.num_edges(); ++e) ending_[static_cast<std::size_t>(h.edge(e).back())].push_back(e);
        counts_.resize(static_cast<std::size_t>(k) + 1);
    }

    int n() const { return h_.num_vertices(); }

    bool edges_ok(Vertex v) {
        for (std::size_t e : ending_[static_cast<std::size_t>(v)]) {
            std::fill(counts_.begin(), counts_.end(), 0);
            for (Vertex u : h_.edge(e)) ++counts_[static_cast<std::size_t>(colour_[static_cast<std::size_t>(u)])];
            bool unique = false;
            for (std::size_t c = 1; c < counts_.size() && !unique; ++c) unique = counts_[c] == 1;
            if (!unique) return false;
        }
        return true;
    }

    bool dfs(Vertex v, int max_used, StateCounter& states) {
        if (v > n()) return true;
        const int top = std::min(max_used + 1, k_);
        for (int c = 0; c <= top; ++c) {
            states.tick();
            colour_[static_cast<std::size_t>(v)] = c;
            if (edges_ok(v) && dfs(v + 1, std::max(max_used, c), states)) return true;
        }
        colour_[static_cast<std::size_t>(v)] = 0;
        return false;
    }

    // Valid canonical assignments of vertices 1..depth, in DFS order.
    void prefixes(Vertex v, Vertex depth, int max_used, std::vector<std::vector<int>>& out) {
        if (v > depth) {
            out.emplace_back(colour_.begin() + 1, colour_.begin() + 1 + depth);
            return;
        }
        const int top = std::min(max_used + 1, k_);
        for (int c = 0; c <= top; ++c) {
            colour_[static_cast<std::size_t>(v)] = c;
            if (edges_ok(v)) prefixes(v + 1, depth, std::max(max_used, c), out);
        }
        colour_[static_cast<std::size_t>(v)] = 0;
    }

    int load(const std::vector<int>& prefix) {
        int used = 0;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            colour_[i + 1] = prefix[i];
            used = std::max(used, prefix[i]);
        }
        return used;
    }

    Colouring result() const { return Colouring(std::vector<int>(colour_.begin() + 1, colour_.end())); }

private:
    const Hypergraph& h_;
    int k_;
    std::vector<int> colour_;
    std::vector<std::vector<std::size_t>> ending_;
    std::vector<int> counts_;
};

void check_colour_budget(int k, const OracleBudget& budget) {
    if (k < 0) throw InputError("colour budget must be non-negative");
    if (k > budget.max_colour_budget)
        throw ResourceError("oracle: colour budget " + std::to_string(k) + " exceeds cap " +
                            std::to_string(budget.max_colour_budget));
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x = 0;
    do x = rng(); while (x >= limit);
    return lo + x % range;
}

int gamma_chi(const Hypergraph& h, const RepresentativeFunction& t) {
    const CoOccurrenceGraph gamma(h, t);
    return chromatic_number_exact(gamma.graph()).chi;
}

}  // namespace

std::optional<Colouring> find_cf_colouring_serial(const Hypergraph& h, int k, const OracleBudget& budget) {
    check_size(h, budget);
    check_colour_budget(k, budget);
    std::atomic<std::uint64_t> shared{0};
    StateCounter states(shared, budget.max_states);
    ColouringSearch search(h, k);
    if (!search.dfs(1, 0, states)) return std::nullopt;
    return search.result();
}

std::optional<Colouring> find_cf_colouring(const Hypergraph& h, int k, const OracleBudget& budget) {
    check_size(h, budget);
    check_colour_budget(k, budget);
    const Vertex depth = std::min(h.num_vertices(), 6);
    std::vector<std::vector<int>> prefixes;
    {
        ColouringSearch seed(h, k);
        seed.prefixes(1, depth, 0, prefixes);
    }
    std::atomic<std::uint64_t> shared{0};
    std::atomic<std::size_t> first_hit{prefixes.size()};
    std::vector<std::optional<Colouring>> found(prefixes.size());
    bool overflow = false;
    std::string overflow_message;

#pragma omp parallel
    {
        ColouringSearch search(h, k);
#pragma omp for schedule(dynamic, 1)
        for (std::size_t i = 0; i < prefixes.size(); ++i) {
            if (i > first_hit.load(std::memory_order_relaxed)) continue;
            try {
                StateCounter states(shared, budget.max_states);
                const int used = search.load(prefixes[i]);
                if (search.dfs(depth + 1, used, states)) {
                    found[i] = search.result();
                    std::size_t cur = first_hit.load();
                    while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
                    }
                }
            } catch (const ResourceError& e) {
#pragma omp critical(cfc_oracle_overflow)
                {
                    overflow = true;
                    overflow_message = e.what();
                }
            }
        }
    }
    const std::size_t hit = first_hit.load();
    if (hit < prefixes.size()) return found[hit];
    if (overflow) throw ResourceError(overflow_message);
    return std::nullopt;
}

int chi_cf_bruteforce_serial(const Hypergraph& h, const OracleBudget& budget) {
    for (int k = 0; k <= budget.max_colour_budget; ++k)
        if (find_cf_colouring_serial(h, k, budget)) return k;
    throw ResourceError("oracle: no conflict-free colouring within colour budget " +
                        std::to_string(budget.max_colour_budget));
}

int chi_cf_bruteforce(const Hypergraph& h, const OracleBudget& budget) {
    for (int k = 0; k <= budget.max_colour_budget; ++k)
        if (find_cf_colouring(h, k, budget)) return k;
    throw ResourceError("oracle: no conflict-free colouring within colour budget " +
                        std::to_string(budget.max_colour_budget));
}

ChiMinResult chi_min_bruteforce_serial(const Hypergraph& h, const OracleBudget& budget) {
    check_size(h, budget);
    const std::uint64_t count = representative_function_count(h);
    if (count > budget.max_states)
        throw ResourceError("oracle: " + std::to_string(count) + " representative functions exceed budget " +
                            std::to_string(budget.max_states));
    int best = std::numeric_limits<int>::max();
    std::uint64_t best_index = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        const int chi = gamma_chi(h, representative_function_at(h, i));
        if (chi < best) {
            best = chi;
            best_index = i;
            if (best <= 1) break;
        }
    }
    return {representative_function_at(h, best_index), best};
}

ChiMinResult chi_min_bruteforce(const Hypergraph& h, const OracleBudget& budget) {
    check_size(h, budget);
    const std::uint64_t count = representative_function_count(h);
    if (count > budget.max_states)
        throw ResourceError("oracle: " + std::to_string(count) + " representative functions exceed budget " +
                            std::to_string(budget.max_states));
    // chi(Gamma_t) >= 1 whenever there is an edge, so the first t reaching 1 is final.
    std::atomic<std::uint64_t> first_one{count};
    int best = std::numeric_limits<int>::max();
    std::uint64_t best_index = 0;
    const auto total = static_cast<std::int64_t>(count);

#pragma omp parallel
    {
        int local_best = std::numeric_limits<int>::max();
        std::uint64_t local_index = 0;
#pragma omp for schedule(dynamic, 16) nowait
        for (std::int64_t s = 0; s < total; ++s) {
            const auto i = static_cast<std::uint64_t>(s);
            if (i > first_one.load(std::memory_order_relaxed)) continue;
            const int chi = gamma_chi(h, representative_function_at(h, i));
            if (chi < local_best || (chi == local_best && i < local_index)) {
                local_best = chi;
                local_index = i;
            }
            if (chi <= 1) {
                std::uint64_t cur = first_one.load();
                while (i < cur && !first_one.compare_exchange_weak(cur, i)) {
                }
            }
        }
#pragma omp critical(cfc_chi_min_reduce)
        {
            if (local_best < best || (local_best == best && local_index < best_index)) {
                best = local_best;
                best_index = local_index;
            }
        }
    }
    return {representative_function_at(h, best_index), best};
}

EhsPartition min_ehs_partition_bruteforce(const Hypergraph& h, const OracleBudget& budget) {
    check_size(h, budget);
    const int n = h.num_vertices();
    const std::size_t m = h.num_edges();
    if (n > 26 || m > 20) throw ResourceError("oracle: partition search limited to 26 vertices and 20 hyperedges");
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t partitions = 1;
    for (std::size_t i = 0; i < m; ++i) partitions *= 3;
    if (subsets * std::max<std::size_t>(m, 1) > budget.max_states || partitions > budget.max_states)
        throw ResourceError("oracle: partition search exceeds state budget");

    std::vector<std::uint32_t> edge_mask(m, 0);
    for (std::size_t e = 0; e < m; ++e)
        for (Vertex v : h.edge(e)) edge_mask[e] |= std::uint32_t{1} << (v - 1);

    const std::uint32_t families = std::uint32_t{1} << m;
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    // witness[F] = a vertex subset hitting every edge of family F exactly once.
    std::vector<std::uint64_t> witness(families, kNone);
    for (std::uint64_t s = 0; s < subsets; ++s) {
        std::uint32_t once = 0;
        for (std::size_t e = 0; e < m; ++e)
            if (std::popcount(static_cast<std::uint32_t>(s) & edge_mask[e]) == 1) once |= std::uint32_t{1} << e;
        if (witness[once] == kNone) witness[once] = s;
    }
    for (std::uint32_t f = families; f-- > 0;) {
        if (witness[f] == kNone) continue;
        for (std::size_t b = 0; b < m; ++b) {
            const std::uint32_t sub = f & ~(std::uint32_t{1} << b);
            if (sub != f && witness[sub] == kNone) witness[sub] = witness[f];
        }
    }

    // parts[mask] = minimum number of exactly hittable blocks partitioning `mask`.
    constexpr int kInf = std::numeric_limits<int>::max() / 2;
    std::vector<int> parts(families, kInf);
    std::vector<std::uint32_t> choice(families, 0);
    parts[0] = 0;
    for (std::uint32_t mask = 1; mask < families; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        const std::uint32_t rest = mask ^ low;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint32_t block = sub | low;
            if (witness[block] != kNone && parts[mask ^ block] + 1 < parts[mask]) {
                parts[mask] = parts[mask ^ block] + 1;
                choice[mask] = block;
            }
            if (sub == 0) break;
        }
    }

    EhsPartition out;
    std::uint32_t mask = families - 1;
    out.parts = parts[mask];
    while (mask != 0) {
        const std::uint32_t block = choice[mask];
        std::vector<std::size_t> edges;
        for (std::size_t e = 0; e < m; ++e)
            if (block & (std::uint32_t{1} << e)) edges.push_back(e);
        std::vector<Vertex> hits;
        const std::uint64_t s = witness[block];
        for (int v = 0; v < n; ++v) {
            if (!((s >> v) & 1U)) continue;
            const bool used = std::any_of(edges.begin(), edges.end(),
                                          [&](std::size_t e) { return (edge_mask[e] >> v) & 1U; });
            if (used) hits.push_back(v + 1);
        }
        out.edge_sets.push_back(std::move(edges));
        out.hitting_sets.push_back(std::move(hits));
        mask ^= block;
    }
    return out;
}

std::optional<std::vector<Vertex>> exact_hitting_set_bruteforce(const Hypergraph& h, const OracleBudget& budget) {
    check_size(h, budget);
    const int n = h.num_vertices();
    if (n > 30) throw ResourceError("oracle: subset enumeration limited to 30 vertices");
    const std::uint64_t subsets = std::uint64_t{1} << n;
    if (subsets > budget.max_states) throw ResourceError("oracle: subset enumeration exceeds state budget");
    std::optional<std::vector<Vertex>> best;
    std::vector<Vertex> s;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        s.clear();
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1U) s.push_back(v + 1);
        if (best && (s.size() > best->size() || (s.size() == best->size() && s >= *best))) continue;
        if (is_exact_hitting_set(h, s)) best = s;
    }
    return best;
}

IntervalHypergraph random_interval_hypergraph(int n_max, int m_max, std::uint64_t seed) {
    if (n_max < 1 || m_max < 1) throw InputError("random_interval_hypergraph needs positive bounds");
    std::mt19937_64 rng(seed);
    const auto n = static_cast<int>(draw(rng, 1, static_cast<std::uint64_t>(n_max)));
    const auto m = static_cast<int>(draw(rng, 1, static_cast<std::uint64_t>(m_max)));
    std::vector<Interval> intervals;
    for (int i = 0; i < m; ++i) {
        const auto a = static_cast<Vertex>(draw(rng, 1, static_cast<std::uint64_t>(n)));
        const auto b = static_cast<Vertex>(draw(rng, 1, static_cast<std::uint64_t>(n)));
        intervals.push_back({std::min(a, b), std::max(a, b)});
    }
    return IntervalHypergraph(n, std::move(intervals));
}

Hypergraph random_hypergraph(int n_max, int m_max, std::uint64_t seed) {
    if (n_max < 1 || m_max < 1 || n_max > 62) throw InputError("random_hypergraph needs bounds in 1..62");
    std::mt19937_64 rng(seed);
    const auto n = static_cast<int>(draw(rng, 1, static_cast<std::uint64_t>(n_max)));
    const auto m = static_cast<int>(draw(rng, 1, static_cast<std::uint64_t>(m_max)));
    std::vector<std::vector<Vertex>> edges;
    for (int i = 0; i < m; ++i) {
        const std::uint64_t mask = draw(rng, 1, (std::uint64_t{1} << n) - 1);
        std::vector<Vertex> e;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1U) e.push_back(v + 1);
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

}  // namespace cfc
