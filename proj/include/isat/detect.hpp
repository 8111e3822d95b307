#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "isat/graph.hpp"

namespace isat {

struct TargetPattern {
    enum class Kind { path, cycle };
    Kind kind = Kind::cycle;
    int size = 0;

    static TargetPattern path(int k) {
        if (k < 1) throw std::invalid_argument("path target: need k >= 1");
        return {Kind::path, k};
    }
    static TargetPattern cycle(int k) {
        if (k < 3) throw std::invalid_argument("cycle target: need k >= 3");
        return {Kind::cycle, k};
    }
    bool operator==(const TargetPattern&) const = default;
};

struct SearchLimits {
    std::uint64_t max_nodes = 100'000'000;
    // zero = no wall-clock cap
    std::chrono::milliseconds max_time{0};
};

enum class SearchStatus { found, absent, budget_exceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::absent;
    std::vector<int> witness;  // cycle in cyclic order / path end to end
    std::uint64_t nodes = 0;
};

namespace detail {

// DFS over chordless paths. adj_count[v] tracks how many path vertices are
// adjacent to v, so a legal extension of the path is exactly a neighbor of
// the last vertex with adj_count == 1 (closing vertices of a cycle carry
// adj_count == 2: the last vertex and the root).
class InducedSearcher {
public:
    InducedSearcher(const Graph& g, const SearchLimits& limits)
        : g_(g),
          limits_(limits),
          in_path_(static_cast<std::size_t>(g.vertex_count()), 0),
          adj_count_(static_cast<std::size_t>(g.vertex_count()), 0) {
        if (limits.max_time.count() > 0)
            deadline_ = std::chrono::steady_clock::now() + limits.max_time;
    }

    SearchResult cycle(int k, std::optional<std::pair<int, int>> anchor) {
        k_ = k;
        if (anchor) {
            anchor_u_ = anchor->first;
            anchor_v_ = anchor->second;
            if (!g_.valid_vertex(anchor_u_) || !g_.valid_vertex(anchor_v_) ||
                anchor_u_ == anchor_v_)
                throw std::invalid_argument("cycle anchor: need two distinct vertices");
            dist_to_v_ = bfs_distances(g_, anchor_v_);
            // both anchors lie on the cycle, so one arc between them has
            // length at most floor(k/2)
            const int du = dist_to_v_[static_cast<std::size_t>(anchor_u_)];
            if (du < 0 || du > k / 2) return finish(SearchStatus::absent);
            push(anchor_u_);
            if (extend_cycle()) return finish(SearchStatus::found);
            pop(anchor_u_);
            return finish(over_budget_ ? SearchStatus::budget_exceeded : SearchStatus::absent);
        }
        for (int root = 0; root < g_.vertex_count(); ++root) {
            if (g_.degree(root) < 2) continue;
            root_ = root;
            push(root);
            if (extend_cycle()) return finish(SearchStatus::found);
            pop(root);
            if (over_budget_) return finish(SearchStatus::budget_exceeded);
        }
        return finish(SearchStatus::absent);
    }

    SearchResult path(int k) {
        k_ = k;
        if (g_.vertex_count() == 0) return finish(SearchStatus::absent);
        if (k == 1) {
            path_ = {0};
            return finish(SearchStatus::found);
        }
        for (int start = 0; start < g_.vertex_count(); ++start) {
            push(start);
            if (extend_path()) return finish(SearchStatus::found);
            pop(start);
            if (over_budget_) return finish(SearchStatus::budget_exceeded);
        }
        return finish(SearchStatus::absent);
    }

private:
    SearchResult finish(SearchStatus status) {
        SearchResult r;
        r.status = status;
        r.nodes = nodes_;
        if (status == SearchStatus::found) r.witness = path_;
        return r;
    }

    bool charge() {
        if (++nodes_ > limits_.max_nodes) {
            over_budget_ = true;
            return false;
        }
        if (deadline_ && (nodes_ & 0xfff) == 0 &&
            std::chrono::steady_clock::now() > *deadline_) {
            over_budget_ = true;
            return false;
        }
        return true;
    }

    void push(int v) {
        path_.push_back(v);
        in_path_[static_cast<std::size_t>(v)] = 1;
        for (int w : g_.neighbors(v)) ++adj_count_[static_cast<std::size_t>(w)];
    }

    void pop(int v) {
        path_.pop_back();
        in_path_[static_cast<std::size_t>(v)] = 0;
        for (int w : g_.neighbors(v)) --adj_count_[static_cast<std::size_t>(w)];
    }

    // anchored mode: root is anchor_u_ and the cycle must also contain
    // anchor_v_; unanchored mode: root_ is the minimum vertex of the cycle
    // and the second vertex is smaller than the last (one traversal per cycle)
    bool extend_cycle() {
        const bool anchored = anchor_u_ >= 0;
        const int last = path_.back();
        const int size = static_cast<int>(path_.size());
        const int root = anchored ? anchor_u_ : root_;
        if (size == k_ - 1) {
            for (int w : g_.neighbors(last)) {
                if (!charge()) return false;
                if (in_path_[static_cast<std::size_t>(w)]) continue;
                if (adj_count_[static_cast<std::size_t>(w)] != 2) continue;
                if (!g_.has_edge(w, root)) continue;
                if (anchored) {
                    if (w != anchor_v_ && !in_path_[static_cast<std::size_t>(anchor_v_)]) continue;
                } else {
                    if (w <= root || w <= path_[1]) continue;
                }
                path_.push_back(w);
                return true;
            }
            return false;
        }
        for (int w : g_.neighbors(last)) {
            if (!charge()) return false;
            if (in_path_[static_cast<std::size_t>(w)]) continue;
            if (adj_count_[static_cast<std::size_t>(w)] != 1) continue;
            if (anchored) {
                // the rest of the cycle must still pick up anchor_v_
                if (w != anchor_v_ && !in_path_[static_cast<std::size_t>(anchor_v_)]) {
                    const int dv = dist_to_v_[static_cast<std::size_t>(w)];
                    if (dv < 0 || dv > k_ - size - 1) continue;
                }
            } else {
                if (w <= root) continue;
            }
            push(w);
            const bool found = extend_cycle();
            if (!found) pop(w);
            if (found || over_budget_) return found;
        }
        return false;
    }

    // start vertex must be the smaller end of the finished path
    bool extend_path() {
        const int last = path_.back();
        const int size = static_cast<int>(path_.size());
        if (size == k_ - 1) {
            for (int w : g_.neighbors(last)) {
                if (!charge()) return false;
                if (in_path_[static_cast<std::size_t>(w)]) continue;
                if (adj_count_[static_cast<std::size_t>(w)] != 1) continue;
                if (w <= path_[0]) continue;
                path_.push_back(w);
                return true;
            }
            return false;
        }
        for (int w : g_.neighbors(last)) {
            if (!charge()) return false;
            if (in_path_[static_cast<std::size_t>(w)]) continue;
            if (adj_count_[static_cast<std::size_t>(w)] != 1) continue;
            push(w);
            const bool found = extend_path();
            if (!found) pop(w);
            if (found || over_budget_) return found;
        }
        return false;
    }

    const Graph& g_;
    SearchLimits limits_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::vector<int> path_;
    std::vector<char> in_path_;
    std::vector<int> adj_count_;
    std::vector<int> dist_to_v_;
    std::uint64_t nodes_ = 0;
    bool over_budget_ = false;
    int k_ = 0;
    int root_ = -1;
    int anchor_u_ = -1;
    int anchor_v_ = -1;
};

}  // namespace detail

/// Finds an induced k-cycle, optionally through both anchor vertices.
inline SearchResult find_induced_cycle(const Graph& g, int k, const SearchLimits& limits = {},
                                       std::optional<std::pair<int, int>> anchor = std::nullopt) {
    if (k < 3) throw std::invalid_argument("find_induced_cycle: need k >= 3");
    detail::InducedSearcher s(g, limits);
    return s.cycle(k, anchor);
}

/// Finds an induced path on k vertices.
inline SearchResult find_induced_path(const Graph& g, int k, const SearchLimits& limits = {}) {
    if (k < 1) throw std::invalid_argument("find_induced_path: need k >= 1");
    detail::InducedSearcher s(g, limits);
    return s.path(k);
}

inline SearchResult find_target(const Graph& g, TargetPattern target,
                                const SearchLimits& limits = {},
                                std::optional<std::pair<int, int>> anchor = std::nullopt) {
    if (target.kind == TargetPattern::Kind::cycle)
        return find_induced_cycle(g, target.size, limits, anchor);
    return find_induced_path(g, target.size, limits);
}

namespace detail {
inline bool subset_contains(const std::vector<int>& sorted, int v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}
}  // namespace detail

inline bool connected_subset(const Graph& g, const std::vector<int>& verts) {
    if (verts.empty()) return true;
    std::vector<int> stack{verts[0]};
    std::vector<int> seen{verts[0]};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(u)) {
            if (!detail::subset_contains(verts, w)) continue;
            if (std::find(seen.begin(), seen.end(), w) != seen.end()) continue;
            seen.push_back(w);
            stack.push_back(w);
        }
    }
    return seen.size() == verts.size();
}

// walks a subset known to induce a path or cycle into traversal order
inline std::vector<int> order_subset(const Graph& g, const std::vector<int>& verts,
                                     bool cycle) {
    if (verts.size() == 1) return verts;
    int start = verts[0];
    if (!cycle) {
        for (int v : verts) {
            int d = 0;
            for (int w : g.neighbors(v))
                if (detail::subset_contains(verts, w)) ++d;
            if (d == 1) {
                start = v;
                break;
            }
        }
    }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (order.size() < verts.size()) {
        for (int w : g.neighbors(cur)) {
            if (w == prev || !detail::subset_contains(verts, w)) continue;
            order.push_back(w);
            prev = cur;
            cur = w;
            break;
        }
    }
    return order;
}

/// Exhaustive k-subset oracle, capped at 14 vertices. Independent of the
/// backtracking searcher: tests each induced subgraph by degree sequence
/// and connectivity.
inline SearchResult brute_force_find(const Graph& g, TargetPattern target) {
    const int n = g.vertex_count();
    if (n > 14) throw std::invalid_argument("brute_force_find: capped at 14 vertices");
    const int k = target.size;
    const bool want_cycle = target.kind == TargetPattern::Kind::cycle;
    SearchResult r;
    if (k > n) return r;

    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        ++r.nodes;
        // degree profile inside the picked set
        std::vector<int> deg(static_cast<std::size_t>(k), 0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.has_edge(pick[static_cast<std::size_t>(i)], pick[static_cast<std::size_t>(j)])) {
                    ++deg[static_cast<std::size_t>(i)];
                    ++deg[static_cast<std::size_t>(j)];
                }
        bool shape_ok;
        if (want_cycle) {
            shape_ok = true;
            for (int d : deg)
                if (d != 2) shape_ok = false;
        } else if (k == 1) {
            shape_ok = true;
        } else {
            int ones = 0, twos = 0;
            for (int d : deg) {
                if (d == 1) ++ones;
                else if (d == 2) ++twos;
            }
            shape_ok = (ones == 2 && twos == k - 2);
        }
        if (shape_ok && connected_subset(g, pick)) {
            r.status = SearchStatus::found;
            r.witness = order_subset(g, pick, want_cycle);
            return r;
        }
        // next k-combination in lexicographic order
        int i = k - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return r;
}

struct EdgeScan {
    bool checked = false;
    bool critical = false;
    std::vector<std::pair<int, int>> failing;
    std::vector<std::pair<int, int>> budget_exceeded;
    std::size_t pairs_checked = 0;
    std::uint64_t nodes = 0;
};

namespace detail {

// distributes [0,n) over workers; slot results keep the input order
template <typename F>
void parallel_for(std::size_t n, int workers, F&& body) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(workers, static_cast<int>(n));
    pool.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pool.emplace_back(run);
    for (auto& th : pool) th.join();
}

enum class ProbeOutcome { pass, fail, budget };

// per-pair verdicts merged in input order, so reports do not depend on
// the worker count
inline EdgeScan scan_pairs(const Graph& g, TargetPattern target,
                           const std::vector<std::pair<int, int>>& pairs, bool deletion,
                           const SearchLimits& limits, int workers) {
    EdgeScan scan;
    scan.checked = true;
    scan.pairs_checked = pairs.size();
    std::vector<ProbeOutcome> outcome(pairs.size(), ProbeOutcome::pass);
    std::vector<std::uint64_t> nodes(pairs.size(), 0);
    parallel_for(pairs.size(), workers, [&](std::size_t i) {
        auto [u, v] = pairs[i];
        Graph h = g;
        if (deletion) h.remove_edge(u, v);
        else h.add_edge(u, v);
        SearchResult r;
        if (target.kind == TargetPattern::Kind::cycle)
            r = find_induced_cycle(h, target.size, limits, std::make_pair(u, v));
        else
            r = find_induced_path(h, target.size, limits);
        nodes[i] = r.nodes;
        if (r.status == SearchStatus::found) outcome[i] = ProbeOutcome::pass;
        else if (r.status == SearchStatus::budget_exceeded) outcome[i] = ProbeOutcome::budget;
        else outcome[i] = ProbeOutcome::fail;
    });
    scan.critical = true;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        scan.nodes += nodes[i];
        if (outcome[i] == ProbeOutcome::fail) {
            scan.critical = false;
            scan.failing.push_back(pairs[i]);
        } else if (outcome[i] == ProbeOutcome::budget) {
            scan.critical = false;
            scan.budget_exceeded.push_back(pairs[i]);
        }
    }
    return scan;
}

}  // namespace detail

/// For every edge uv, checks that G-e still contains an induced copy of the
/// target. Cycle searches are anchored at (u,v): when G is target-free, any
/// induced copy in G-e must pass through both ends of the removed edge.
inline EdgeScan deletion_critical(const Graph& g, TargetPattern target,
                                  const SearchLimits& limits = {}, int workers = 1) {
    return detail::scan_pairs(g, target, g.edges(), true, limits, workers);
}

/// For every non-edge uv, checks that G+e contains an induced copy of the
/// target; cycle searches anchored at the new edge's ends.
inline EdgeScan addition_critical(const Graph& g, TargetPattern target,
                                  const SearchLimits& limits = {}, int workers = 1) {
    return detail::scan_pairs(g, target, g.non_edges(), false, limits, workers);
}

struct VerificationReport {
    TargetPattern target;
    bool free = false;
    bool free_budget_exceeded = false;
    std::optional<std::vector<int>> witness;
    EdgeScan deletion;
    EdgeScan addition;
    bool induced_saturated = false;
    std::uint64_t nodes = 0;
    std::int64_t millis = 0;
};

enum class VerifyMode { free_only, del_critical, add_critical, is_saturated };

inline VerificationReport verify(const Graph& g, TargetPattern target,
                                 VerifyMode mode = VerifyMode::is_saturated,
                                 const SearchLimits& limits = {}, int workers = 1) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.target = target;
    const SearchResult fr = find_target(g, target, limits);
    rep.nodes = fr.nodes;
    rep.free = fr.status == SearchStatus::absent;
    rep.free_budget_exceeded = fr.status == SearchStatus::budget_exceeded;
    if (fr.status == SearchStatus::found) rep.witness = fr.witness;
    if (rep.free) {
        if (mode == VerifyMode::del_critical || mode == VerifyMode::is_saturated) {
            rep.deletion = deletion_critical(g, target, limits, workers);
            rep.nodes += rep.deletion.nodes;
        }
        if (mode == VerifyMode::add_critical || mode == VerifyMode::is_saturated) {
            rep.addition = addition_critical(g, target, limits, workers);
            rep.nodes += rep.addition.nodes;
        }
    }
    rep.induced_saturated = rep.free && rep.deletion.checked && rep.deletion.critical &&
                            rep.addition.checked && rep.addition.critical;
    rep.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return rep;
}

/// Full H-induced-saturation check (freeness plus both criticality scans).
inline VerificationReport induced_saturated(const Graph& g, TargetPattern target,
                                            const SearchLimits& limits = {}, int workers = 1) {
    return verify(g, target, VerifyMode::is_saturated, limits, workers);
}

inline std::pair<bool, std::optional<std::vector<int>>> is_free(const Graph& g,
                                                                TargetPattern target,
                                                                const SearchLimits& limits = {}) {
    const SearchResult r = find_target(g, target, limits);
    if (r.status == SearchStatus::budget_exceeded)
        throw std::runtime_error("is_free: search budget exceeded");
    if (r.status == SearchStatus::found) return {false, r.witness};
    return {true, std::nullopt};
}

}  // namespace isat
