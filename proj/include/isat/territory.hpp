#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isat/graph.hpp"

namespace isat {

struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A graph with a distinguished boundary that must induce a chordless cycle.
struct Territory {
    Graph graph;
    CyclicSeq boundary;
    int t = 0;
    int rings = 0;          // number of subdivided rings glued onto the base cycle
    bool expanded = false;  // true once a detour expansion has been applied

    long long perimeter() const { return boundary.size(); }
};

/// One expansion step: detour paths replace the chosen boundary vertices.
/// positions index into the boundary and must form a stable set of the
/// boundary cycle; gadgets selects which detours carry the extra Q path
/// (indices into positions).
struct ExpansionSpec {
    std::vector<int> positions;
    std::vector<int> gadgets;

    int k() const { return static_cast<int>(positions.size()); }
};

struct PerimeterSolution {
    int m = 0;
    long long s1 = 0, s2 = 0;
    long long d = 0, q = 0, r = 0;
};

namespace detail {
// linear-time equivalent of the quadratic induced-cycle predicate: with all
// consecutive pairs adjacent, the boundary is chordless exactly when every
// boundary vertex has two boundary neighbors
inline bool boundary_chordless(const Graph& g, const CyclicSeq& b) {
    const int k = b.size();
    if (k < 3) return false;
    std::vector<char> on(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : b.verts) {
        if (!g.valid_vertex(v) || on[static_cast<std::size_t>(v)]) return false;
        on[static_cast<std::size_t>(v)] = 1;
    }
    for (int i = 0; i < k; ++i)
        if (!g.has_edge(b[i], b.at(i + 1))) return false;
    for (int v : b.verts) {
        int cnt = 0;
        for (int w : g.neighbors(v)) cnt += on[static_cast<std::size_t>(w)];
        if (cnt != 2) return false;
    }
    return true;
}
}  // namespace detail

inline Territory base_territory(int t) {
    if (t < 5) throw std::invalid_argument("territory: need t >= 5");
    Territory T;
    T.t = t;
    T.graph = Graph(t);
    T.graph.labels.resize(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        T.graph.add_edge(i, (i + 1) % t);
        T.graph.labels[static_cast<std::size_t>(i)] = "r0:" + std::to_string(i);
        T.boundary.verts.push_back(i);
    }
    return T;
}

/// Rings the current boundary with the (t-4)-subdivision of an equally long
/// cycle: one branch vertex per boundary vertex (joined by a spoke) and t-4
/// subdivision vertices per branch gap. Perimeter grows by a factor of t-3.
inline Territory grow_canonical(const Territory& T) {
    if (T.t < 5) throw std::invalid_argument("grow_canonical: malformed territory (t < 5)");
    if (T.expanded)
        throw std::invalid_argument("grow_canonical: territory already expanded");
    if (!detail::boundary_chordless(T.graph, T.boundary))
        throw std::invalid_argument("grow_canonical: boundary is not an induced cycle");

    const int t = T.t;
    const int L = static_cast<int>(T.perimeter());
    const int seg = t - 3;  // ring vertices per old boundary vertex
    const int ring_n = L * seg;

    Territory out = T;
    Graph& g = out.graph;
    if (g.labels.empty()) g.labels.resize(static_cast<std::size_t>(g.vertex_count()));
    const int first = g.add_vertices(ring_n);
    const int level = T.rings + 1;
    for (int j = 0; j < ring_n; ++j) {
        g.add_edge(first + j, first + (j + 1) % ring_n);
        g.labels[static_cast<std::size_t>(first + j)] =
            "r" + std::to_string(level) + ":" + std::to_string(j);
    }
    for (int i = 0; i < L; ++i) g.add_edge(T.boundary[i], first + i * seg);

    out.boundary.verts.clear();
    for (int j = 0; j < ring_n; ++j) out.boundary.verts.push_back(first + j);
    out.rings = level;
    return out;
}

/// The level-m canonical core: a t-cycle ringed m times.
/// Vertex count is sum over j<=m of t*(t-3)^j; perimeter t*(t-3)^m.
inline Territory canonical(int t, int m) {
    if (m < 0) throw std::invalid_argument("canonical: need m >= 0");
    Territory T = base_territory(t);
    for (int i = 0; i < m; ++i) T = grow_canonical(T);
    return T;
}

/// Applies one expansion step. Each chosen boundary vertex x is bypassed by
/// a path P of length 2t-6 (ends tied to the boundary neighbors of x, middle
/// tied to x); gadgeted detours additionally route the boundary around the
/// middle of P through a path Q of length t-4.
inline Territory expand(const Territory& T, const ExpansionSpec& spec) {
    const int t = T.t;
    if (t < 5) throw std::invalid_argument("expand: malformed territory (t < 5)");
    if (!detail::boundary_chordless(T.graph, T.boundary))
        throw std::invalid_argument("expand: boundary is not an induced cycle");
    const int perim = static_cast<int>(T.perimeter());
    const int k = spec.k();
    if (2 * k > perim) throw std::invalid_argument("expand: 2k exceeds perimeter");

    std::vector<int> sorted = spec.positions;
    std::sort(sorted.begin(), sorted.end());
    for (int p : sorted)
        if (p < 0 || p >= perim) throw std::invalid_argument("expand: position out of range");
    for (int i = 0; i + 1 < k; ++i)
        if (sorted[static_cast<std::size_t>(i + 1)] - sorted[static_cast<std::size_t>(i)] < 2)
            throw std::invalid_argument("expand: positions are not a stable set");
    if (k >= 2 && (perim - sorted.back()) + sorted.front() < 2)
        throw std::invalid_argument("expand: positions are not a stable set");

    std::vector<char> gadget_at(static_cast<std::size_t>(perim), 0);
    std::vector<char> chosen(static_cast<std::size_t>(perim), 0);
    for (int p : spec.positions) chosen[static_cast<std::size_t>(p)] = 1;
    for (int gi : spec.gadgets) {
        if (gi < 0 || gi >= k) throw std::invalid_argument("expand: gadget index out of range");
        gadget_at[static_cast<std::size_t>(spec.positions[static_cast<std::size_t>(gi)])] = 1;
    }

    Territory out = T;
    out.expanded = true;
    if (k == 0) return out;
    Graph& g = out.graph;
    if (g.labels.empty()) g.labels.resize(static_cast<std::size_t>(g.vertex_count()));

    const int plen = 2 * t - 6;  // detour path length; even, so the middle is unique
    std::vector<std::vector<int>> detour(static_cast<std::size_t>(perim));
    for (int p = 0; p < perim; ++p) {
        if (!chosen[static_cast<std::size_t>(p)]) continue;
        const int x = T.boundary[p];
        const int xm = T.boundary.at(p - 1);
        const int xp = T.boundary.at(p + 1);
        const int p0 = g.add_vertices(plen + 1);
        for (int j = 0; j < plen; ++j) g.add_edge(p0 + j, p0 + j + 1);
        for (int j = 0; j <= plen; ++j)
            g.labels[static_cast<std::size_t>(p0 + j)] =
                "x" + std::to_string(p) + ":P" + std::to_string(j);
        g.add_edge(xm, p0);
        g.add_edge(x, p0 + (t - 3));
        g.add_edge(xp, p0 + plen);

        auto& seq = detour[static_cast<std::size_t>(p)];
        if (!gadget_at[static_cast<std::size_t>(p)]) {
            for (int j = 0; j <= plen; ++j) seq.push_back(p0 + j);
        } else {
            const int q0 = g.add_vertices(t - 3);
            for (int j = 0; j < t - 4; ++j) g.add_edge(q0 + j, q0 + j + 1);
            for (int j = 0; j <= t - 4; ++j)
                g.labels[static_cast<std::size_t>(q0 + j)] =
                    "x" + std::to_string(p) + ":Q" + std::to_string(j);
            g.add_edge(p0 + (t - 4), q0);            // v- to z-
            g.add_edge(p0 + (t - 2), q0 + (t - 4));  // v+ to z+
            for (int j = 0; j <= t - 4; ++j) seq.push_back(p0 + j);
            for (int j = 0; j <= t - 4; ++j) seq.push_back(q0 + j);
            for (int j = t - 2; j <= plen; ++j) seq.push_back(p0 + j);
        }
    }

    out.boundary.verts.clear();
    for (int p = 0; p < perim; ++p) {
        if (chosen[static_cast<std::size_t>(p)])
            out.boundary.verts.insert(out.boundary.verts.end(),
                                      detour[static_cast<std::size_t>(p)].begin(),
                                      detour[static_cast<std::size_t>(p)].end());
        else
            out.boundary.verts.push_back(T.boundary[p]);
    }
    return out;
}

/// Smallest-s2 solution of (2t-6)s1 + (3t-10)s2 = lambda - lambda_prime
/// with 2(s1+s2) <= lambda_prime, if any.
inline std::optional<std::pair<long long, long long>> expansion_params(int t,
                                                                       long long lambda_prime,
                                                                       long long lambda) {
    if (t < 5) throw std::invalid_argument("expansion_params: need t >= 5");
    if (lambda_prime < 3) throw std::invalid_argument("expansion_params: need lambda' >= 3");
    const long long diff = lambda - lambda_prime;
    if (diff < 0) return std::nullopt;
    const long long a = 2 * t - 6, b = 3 * t - 10;
    for (long long s2 = 0; s2 * b <= diff; ++s2) {
        const long long rem = diff - b * s2;
        if (rem % a != 0) continue;
        const long long s1 = rem / a;
        if (2 * (s1 + s2) <= lambda_prime) return std::make_pair(s1, s2);
    }
    return std::nullopt;
}

struct CanonicalPlan {
    Territory territory;
    PerimeterSolution solution;
};

namespace detail {
// t*(t-3)^m, saturating far below overflow
inline long long ring_perimeter(int t, int m) {
    constexpr long long cap = 1LL << 60;
    long long lam = t;
    for (int i = 0; i < m; ++i) {
        if (lam > cap / (t - 3)) return cap;
        lam *= (t - 3);
    }
    return lam;
}
}  // namespace detail

/// Builds a canonical territory of perimeter exactly lambda. For even
/// lambda >= t^3 the level and the (s1, s2) split come from the closed
/// formulas: pick m with t(t-3)^m <= lambda - (2t-6)(3t-10) < t(t-3)^{m+1},
/// write lambda - t(t-3)^m = 2d = (2t-6)q + r, then s1 = 3d - (3t-10)(q+1)
/// and s2 = (2t-6)(q+1) - 2d. Smaller even perimeters fall back to an
/// exhaustive feasibility scan over (m, s1, s2).
inline CanonicalPlan canonical_with_perimeter(int t, long long lambda) {
    if (t < 5) throw std::invalid_argument("canonical_with_perimeter: need t >= 5");
    if (lambda % 2 != 0)
        throw infeasible_error("no canonical territory of odd perimeter " +
                               std::to_string(lambda));
    const long long t3 = static_cast<long long>(t) * t * t;
    PerimeterSolution sol;
    bool solved = false;
    if (lambda >= t3) {
        const long long target = lambda - static_cast<long long>(2 * t - 6) * (3 * t - 10);
        int m = 0;
        while (detail::ring_perimeter(t, m + 1) <= target) ++m;
        const long long lam_m = detail::ring_perimeter(t, m);
        sol.m = m;
        sol.d = (lambda - lam_m) / 2;
        sol.q = (2 * sol.d) / (2 * t - 6);
        sol.r = (2 * sol.d) % (2 * t - 6);
        sol.s1 = 3 * sol.d - static_cast<long long>(3 * t - 10) * (sol.q + 1);
        sol.s2 = static_cast<long long>(2 * t - 6) * (sol.q + 1) - 2 * sol.d;
        if (sol.s1 < 0 || sol.s2 < 0 || 2 * (sol.s1 + sol.s2) > lam_m)
            throw std::logic_error("canonical_with_perimeter: formula produced a bad split");
        solved = true;
    } else {
        for (int m = 0; detail::ring_perimeter(t, m) <= lambda; ++m) {
            const long long lam_m = detail::ring_perimeter(t, m);
            if (auto p = expansion_params(t, lam_m, lambda)) {
                sol.m = m;
                sol.s1 = p->first;
                sol.s2 = p->second;
                sol.d = (lambda - lam_m) / 2;
                sol.q = (2 * sol.d) / (2 * t - 6);
                sol.r = (2 * sol.d) % (2 * t - 6);
                solved = true;
                break;
            }
        }
    }
    if (!solved)
        throw infeasible_error("no canonical territory of perimeter " + std::to_string(lambda) +
                               " for t=" + std::to_string(t));

    CanonicalPlan plan;
    plan.solution = sol;
    Territory core = canonical(t, sol.m);
    const long long lam_m = core.perimeter();
    ExpansionSpec spec;
    const long long count = sol.s1 + sol.s2;
    if (count > 0) {
        const long long spacing = lam_m / count;
        for (long long i = 0; i < count; ++i)
            spec.positions.push_back(static_cast<int>(i * spacing));
        for (long long i = 0; i < sol.s2; ++i) spec.gadgets.push_back(static_cast<int>(i));
    }
    plan.territory = expand(core, spec);
    if (plan.territory.perimeter() != lambda)
        throw std::logic_error("canonical_with_perimeter: perimeter mismatch");
    return plan;
}

struct TerritoryDiagnostics {
    bool ok = true;
    std::vector<std::string> issues;

    void fail(std::string msg) {
        ok = false;
        issues.push_back(std::move(msg));
    }
};

inline TerritoryDiagnostics validate_territory(const Territory& T) {
    TerritoryDiagnostics d;
    if (T.t < 5) d.fail("t must be at least 5");
    const int k = T.boundary.size();
    if (k < 3) {
        d.fail("boundary shorter than 3");
        return d;
    }
    std::vector<int> sorted = T.boundary.verts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        d.fail("boundary repeats a vertex");
    for (int v : T.boundary.verts)
        if (!T.graph.valid_vertex(v)) d.fail("boundary vertex " + std::to_string(v) + " out of range");
    if (!d.ok) return d;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            const bool edge = T.graph.has_edge(T.boundary[i], T.boundary[j]);
            if (consecutive && !edge)
                d.fail("boundary edge " + std::to_string(T.boundary[i]) + "-" +
                       std::to_string(T.boundary[j]) + " missing");
            if (!consecutive && edge)
                d.fail("chord " + std::to_string(T.boundary[i]) + "-" +
                       std::to_string(T.boundary[j]) + " across the boundary");
        }
    if (!T.graph.check_invariants()) d.fail("graph adjacency invariants violated");
    return d;
}

}  // namespace isat
