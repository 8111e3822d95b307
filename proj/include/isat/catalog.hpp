#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "isat/graph.hpp"

namespace isat {

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete: need n >= 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: need a,b >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline Graph edgeless_graph(int n) {
    if (n < 0) throw std::invalid_argument("edgeless: need n >= 0");
    return Graph(n);
}

/// Pentagonal antiprism plus two apexes; 12 vertices, 5-regular.
inline Graph icosahedron() {
    Graph g(12);
    // 0 = top apex, 1..5 top ring, 6..10 bottom ring, 11 = bottom apex
    for (int i = 0; i < 5; ++i) {
        g.add_edge(0, 1 + i);
        g.add_edge(11, 6 + i);
        g.add_edge(1 + i, 1 + (i + 1) % 5);
        g.add_edge(6 + i, 6 + (i + 1) % 5);
        g.add_edge(1 + i, 6 + i);
        g.add_edge(1 + i, 6 + (i + 4) % 5);
    }
    return g;
}

/// Cubic Hamiltonian graph from an LCF code: vertices 0..n-1 on the cycle
/// 0-1-...-(n-1)-0 plus the chord i ~ i+shifts[i mod |shifts|] (mod n).
inline Graph lcf_graph(const std::vector<int>& shifts, int repeats) {
    const int n = static_cast<int>(shifts.size()) * repeats;
    if (n < 3) throw std::invalid_argument("lcf: too few vertices");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    for (int i = 0; i < n; ++i) {
        int j = ((i + shifts[static_cast<std::size_t>(i) % shifts.size()]) % n + n) % n;
        if (!g.has_edge(i, j)) g.add_edge(i, j);
    }
    return g;
}

inline Graph dodecahedron() { return lcf_graph({10, 7, 4, -4, -7, 10, -4, 7, -7, 4}, 2); }

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

/// Dvorak's graph VD_t on 2t vertices: u_i (IDs 0..t-1) form a t-cycle,
/// v_i (IDs t..2t-1) form the complement of that cycle, u_i ~ v_i.
inline Graph vd_graph(int t) {
    if (t < 3) throw std::invalid_argument("vd: need t >= 3");
    Graph g(2 * t);
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j) {
            const bool near = (j - i == 1) || (j - i == t - 1);
            if (near) g.add_edge(i - 1, j - 1);
            else g.add_edge(t + i - 1, t + j - 1);
        }
    for (int i = 0; i < t; ++i) g.add_edge(i, t + i);
    return g;
}

/// Brick-wall honeycomb on the torus: vertices (i,j) in Z_m x Z_n with
/// ID i*n+j, row edges (i,j)-(i,j+1) always and the vertical edge
/// (i,j)-(i+1,j) exactly when i+j is even. 3-regular; hexagonal faces.
inline Graph hex_torus(int rows, int cols) {
    if (rows < 4 || cols < 4 || rows % 2 != 0 || cols % 2 != 0)
        throw std::invalid_argument("hex_torus: need even rows, cols >= 4");
    Graph g(rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            g.add_edge(i * cols + j, i * cols + (j + 1) % cols);
            if ((i + j) % 2 == 0) g.add_edge(i * cols + j, ((i + 1) % rows) * cols + j);
        }
    return g;
}

inline Graph c5xc5() { return cartesian_product(cycle_graph(5), cycle_graph(5)); }

inline Graph line_ktt(int t) {
    if (t < 2) throw std::invalid_argument("line_ktt: need t >= 2");
    return line_graph(complete_bipartite(t, t));
}

/// Cubic Hamiltonian base graphs with their designated Hamiltonian cycle.
struct BaseSpec {
    std::string name;
    Graph graph;
    CyclicSeq ham;
};

inline CyclicSeq identity_cycle(int n) {
    CyclicSeq c;
    c.verts.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c.verts[static_cast<std::size_t>(i)] = i;
    return c;
}

inline BaseSpec cubic_base(const std::string& name) {
    if (name == "k4") return {name, complete_graph(4), identity_cycle(4)};
    if (name == "k33") return {name, complete_bipartite(3, 3), CyclicSeq({0, 3, 1, 4, 2, 5})};
    if (name == "cube") return {name, lcf_graph({3, -3}, 4), identity_cycle(8)};
    if (name == "heawood") return {name, lcf_graph({5, -5}, 7), identity_cycle(14)};
    if (name == "mobius_kantor") return {name, lcf_graph({5, -5}, 8), identity_cycle(16)};
    if (name == "pappus") return {name, lcf_graph({5, 7, -7, 7, -7, -5}, 3), identity_cycle(18)};
    if (name == "desargues") return {name, lcf_graph({5, -5, 9, -9}, 5), identity_cycle(20)};
    throw std::invalid_argument("unknown cubic base: " + name);
}

inline const std::vector<std::string>& cubic_base_names() {
    static const std::vector<std::string> names = {"k4",     "k33",           "cube",     "heawood",
                                                   "mobius_kantor", "pappus", "desargues"};
    return names;
}

namespace detail {
// splits "a,b" at top level commas (no nesting of same depth)
inline std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline int arg_int(const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer argument: " + s);
    return v;
}
}  // namespace detail

/// Builds a catalog graph from a spec string such as "petersen",
/// "cycle(6)", "hex_torus(6,8)", "complement(icosahedron)",
/// "line_graph(complete_bipartite(3,3))" or "cartesian(cycle(5),cycle(5))".
inline Graph named_graph(const std::string& spec_in) {
    std::string spec;
    for (char c : spec_in)
        if (!std::isspace(static_cast<unsigned char>(c))) spec.push_back(c == '-' ? '_' : c);

    std::string head = spec;
    std::vector<std::string> args;
    const auto open = spec.find('(');
    if (open != std::string::npos) {
        if (spec.back() != ')') throw std::invalid_argument("bad graph spec: " + spec_in);
        head = spec.substr(0, open);
        args = detail::split_args(spec.substr(open + 1, spec.size() - open - 2));
    }
    const int argc = static_cast<int>(args.size());
    auto want = [&](int k) {
        if (argc != k)
            throw std::invalid_argument("graph spec " + head + ": expected " + std::to_string(k) +
                                        " argument(s)");
    };

    if (head == "icosahedron") { want(0); return icosahedron(); }
    if (head == "dodecahedron") { want(0); return dodecahedron(); }
    if (head == "petersen") { want(0); return petersen(); }
    if (head == "c5xc5") { want(0); return c5xc5(); }
    if (head == "cycle") { want(1); return cycle_graph(detail::arg_int(args[0])); }
    if (head == "path") { want(1); return path_graph(detail::arg_int(args[0])); }
    if (head == "complete") { want(1); return complete_graph(detail::arg_int(args[0])); }
    if (head == "edgeless") { want(1); return edgeless_graph(detail::arg_int(args[0])); }
    if (head == "complete_bipartite") {
        want(2);
        return complete_bipartite(detail::arg_int(args[0]), detail::arg_int(args[1]));
    }
    if (head == "vd") { want(1); return vd_graph(detail::arg_int(args[0])); }
    if (head == "hex_torus") {
        want(2);
        return hex_torus(detail::arg_int(args[0]), detail::arg_int(args[1]));
    }
    if (head == "line_ktt") { want(1); return line_ktt(detail::arg_int(args[0])); }
    if (head == "complement") { want(1); return complement(named_graph(args[0])); }
    if (head == "line_graph") { want(1); return line_graph(named_graph(args[0])); }
    if (head == "cartesian") {
        want(2);
        return cartesian_product(named_graph(args[0]), named_graph(args[1]));
    }
    for (const auto& base : cubic_base_names())
        if (head == base) { want(0); return cubic_base(head).graph; }
    throw std::invalid_argument("unknown graph family: " + head);
}

}  // namespace isat
