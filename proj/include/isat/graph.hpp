#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isat {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ordered list of distinct vertex IDs, read cyclically.
struct CyclicSeq {
    std::vector<int> verts;

    CyclicSeq() = default;
    explicit CyclicSeq(std::vector<int> v) : verts(std::move(v)) {}

    int size() const { return static_cast<int>(verts.size()); }
    // index taken mod size, so seq.at(-1) is the last vertex
    int at(int i) const {
        const int n = size();
        return verts[static_cast<std::size_t>(((i % n) + n) % n)];
    }
    int operator[](int i) const { return verts[static_cast<std::size_t>(i)]; }

    bool operator==(const CyclicSeq&) const = default;
};

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
/// Invariants: symmetric adjacency, no loops, edge_count == sum(deg)/2.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
    }

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const { return edges_; }

    bool valid_vertex(int v) const { return v >= 0 && v < vertex_count(); }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool has_edge(int u, int v) const {
        if (!valid_vertex(u) || !valid_vertex(v)) return false;
        const auto& a = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    // first of the newly created vertex IDs
    int add_vertices(int count) {
        const int first = vertex_count();
        adj_.resize(adj_.size() + static_cast<std::size_t>(count));
        if (!labels.empty()) labels.resize(adj_.size());
        return first;
    }

    void add_edge(int u, int v) {
        if (!valid_vertex(u) || !valid_vertex(v))
            throw std::invalid_argument("add_edge: vertex out of range");
        if (u == v) throw std::invalid_argument("add_edge: loop");
        if (has_edge(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
        insert_sorted(adj_[static_cast<std::size_t>(u)], v);
        insert_sorted(adj_[static_cast<std::size_t>(v)], u);
        ++edges_;
    }

    void remove_edge(int u, int v) {
        if (!has_edge(u, v)) throw std::invalid_argument("remove_edge: no such edge");
        erase_sorted(adj_[static_cast<std::size_t>(u)], v);
        erase_sorted(adj_[static_cast<std::size_t>(v)], u);
        --edges_;
    }

    // edges as (u,v) with u < v, lexicographically ascending
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edges_);
        for (int u = 0; u < vertex_count(); ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    std::vector<std::pair<int, int>> non_edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < vertex_count(); ++u)
            for (int v = u + 1; v < vertex_count(); ++v)
                if (!has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    bool check_invariants() const {
        std::size_t half_degrees = 0;
        for (int u = 0; u < vertex_count(); ++u) {
            const auto& a = adj_[static_cast<std::size_t>(u)];
            if (!std::is_sorted(a.begin(), a.end())) return false;
            if (std::adjacent_find(a.begin(), a.end()) != a.end()) return false;
            for (int v : a) {
                if (!valid_vertex(v) || v == u) return false;
                if (!has_edge(v, u)) return false;
            }
            half_degrees += a.size();
        }
        return half_degrees == 2 * edges_;
    }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

    // optional per-vertex labels; empty vector means unlabeled
    std::vector<std::string> labels;

private:
    static void insert_sorted(std::vector<int>& a, int v) {
        a.insert(std::lower_bound(a.begin(), a.end(), v), v);
    }
    static void erase_sorted(std::vector<int>& a, int v) {
        a.erase(std::lower_bound(a.begin(), a.end(), v));
    }

    std::vector<std::vector<int>> adj_;
    std::size_t edges_ = 0;
};

/// Parses "u v" lines (0-indexed, '#' comments, blank lines ignored).
/// Resulting vertex count is 1 + max vertex ID.
inline Graph parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    long long max_id = -1;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u)) continue;  // blank or comment-only line
        std::string rest;
        if (!(ls >> v) || (ls >> rest)) {
            throw parse_error("edge list line " + std::to_string(lineno) + ": expected \"u v\"");
        }
        if (u < 0 || v < 0)
            throw parse_error("edge list line " + std::to_string(lineno) + ": negative vertex ID");
        if (u == v)
            throw parse_error("edge list line " + std::to_string(lineno) + ": loop edge");
        max_id = std::max({max_id, u, v});
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    Graph g(static_cast<int>(max_id + 1));
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (g.has_edge(u, v)) throw parse_error("edge list: duplicate edge " + std::to_string(u) +
                                                " " + std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph complement(const Graph& g) {
    Graph h(g.vertex_count());
    h.labels = g.labels;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

/// BFS distance in edges; nullopt when u and v are in different components.
inline std::optional<int> distance(const Graph& g, int u, int v) {
    if (!g.valid_vertex(u) || !g.valid_vertex(v))
        throw std::invalid_argument("distance: vertex out of range");
    if (u == v) return 0;
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    dist[static_cast<std::size_t>(u)] = 0;
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] >= 0) continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            if (y == v) return dist[static_cast<std::size_t>(y)];
            q.push(y);
        }
    }
    return std::nullopt;
}

// all BFS distances from src; -1 for unreachable
inline std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
    dist[static_cast<std::size_t>(src)] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x)) {
            if (dist[static_cast<std::size_t>(y)] >= 0) continue;
            dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
            q.push(y);
        }
    }
    return dist;
}

/// Exact girth: BFS from every vertex, taking the minimum closed walk
/// dist[u]+dist[v]+1 over non-tree edges. nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[static_cast<std::size_t>(root)] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            // everything at this depth is already too deep to improve best
            if (best >= 0 && 2 * dist[static_cast<std::size_t>(u)] >= best) break;
            for (int v : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(v)] < 0) {
                    dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(v)] = u;
                    q.push(v);
                } else if (v != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

/// Connected components as sorted vertex sets, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.neighbors(u)) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    stack.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// Cartesian product: (a,x) ~ (b,y) iff (a==b and x~y) or (x==y and a~b).
/// Vertex (a,x) gets ID a*|V(H)|+x.
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    Graph p(ng * nh);
    for (int a = 0; a < ng; ++a)
        for (int x = 0; x < nh; ++x) {
            for (int y : h.neighbors(x))
                if (x < y) p.add_edge(a * nh + x, a * nh + y);
            for (int b : g.neighbors(a))
                if (a < b) p.add_edge(a * nh + x, b * nh + x);
        }
    return p;
}

/// Line graph: one vertex per edge of g (edges in sorted order),
/// adjacent iff the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    const auto es = g.edges();
    Graph l(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                l.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return l;
}

/// True iff seq is an induced cycle of g: length >= 3, distinct vertices,
/// consecutive pairs adjacent, all other pairs non-adjacent.
inline bool is_induced_cycle(const Graph& g, const CyclicSeq& seq) {
    const int k = seq.size();
    if (k < 3) return false;
    std::vector<int> sorted = seq.verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : sorted)
        if (!g.valid_vertex(v)) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (g.has_edge(seq[i], seq[j]) != consecutive) return false;
        }
    return true;
}

/// True iff verts is an induced path of g (single vertex allowed).
inline bool is_induced_path(const Graph& g, const std::vector<int>& verts) {
    const int k = static_cast<int>(verts.size());
    if (k < 1) return false;
    std::vector<int> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (int v : sorted)
        if (!g.valid_vertex(v)) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)]) !=
                (j == i + 1))
                return false;
    return true;
}

inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    if (!g.labels.empty())
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!g.labels[static_cast<std::size_t>(v)].empty())
                out << "  " << v << " [label=\"" << g.labels[static_cast<std::size_t>(v)] << "\"];\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace isat
