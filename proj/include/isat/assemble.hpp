#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "isat/detect.hpp"
#include "isat/graph.hpp"
#include "isat/territory.hpp"

namespace isat {

/// Induced subgraph on verts (sorted ascending); local ID i maps to verts[i].
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::map<int, int> local;
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (int w : g.neighbors(verts[i])) {
            auto it = local.find(w);
            if (it != local.end() && it->second > static_cast<int>(i))
                h.add_edge(static_cast<int>(i), it->second);
        }
    return h;
}

/// 3-regular Hamiltonian base with its edge partition into three perfect
/// matchings: M1/M2 alternate along the Hamiltonian cycle, M3 is the rest.
struct CubicBase {
    std::string name;
    Graph graph;
    CyclicSeq ham;
    std::vector<std::pair<int, int>> m1, m2, m3;
    int girth = 0;
    int girth_required = 0;
};

namespace detail {
inline std::pair<int, int> ordered(int u, int v) { return u < v ? std::make_pair(u, v) : std::make_pair(v, u); }

inline void check_perfect_matching(const Graph& g, const std::vector<std::pair<int, int>>& m,
                                   const char* label) {
    std::vector<char> hit(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [u, v] : m) {
        if (hit[static_cast<std::size_t>(u)] || hit[static_cast<std::size_t>(v)])
            throw std::logic_error(std::string(label) + ": not a matching");
        hit[static_cast<std::size_t>(u)] = hit[static_cast<std::size_t>(v)] = 1;
    }
    for (char h : hit)
        if (!h) throw std::logic_error(std::string(label) + ": not perfect");
}
}  // namespace detail

inline CubicBase validate_base(const Graph& gamma, const CyclicSeq& omega, int g_min,
                               const std::string& name = "base") {
    const int n = gamma.vertex_count();
    for (int v = 0; v < n; ++v)
        if (gamma.degree(v) != 3)
            throw std::invalid_argument("not_cubic: vertex " + std::to_string(v) + " has degree " +
                                        std::to_string(gamma.degree(v)));

    if (omega.size() != n)
        throw std::invalid_argument("not_hamiltonian: cycle visits " +
                                    std::to_string(omega.size()) + " of " + std::to_string(n) +
                                    " vertices");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : omega.verts) {
        if (!gamma.valid_vertex(v) || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("not_hamiltonian: repeated or invalid vertex " +
                                        std::to_string(v));
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int i = 0; i < n; ++i)
        if (!gamma.has_edge(omega[i], omega.at(i + 1)))
            throw std::invalid_argument("not_hamiltonian: " + std::to_string(omega[i]) + "-" +
                                        std::to_string(omega.at(i + 1)) + " is not an edge");

    const auto gi = girth(gamma);
    if (!gi || *gi < g_min)
        throw std::invalid_argument("girth_too_small: girth " +
                                    (gi ? std::to_string(*gi) : std::string("inf")) + " < " +
                                    std::to_string(g_min));

    // cubic graphs have even order, so the alternation closes up
    if (n % 2 != 0) throw std::logic_error("odd_cycle_alternation: cubic graph with odd order");

    CubicBase base;
    base.name = name;
    base.graph = gamma;
    base.ham = omega;
    base.girth = *gi;
    base.girth_required = g_min;
    std::vector<char> on_ham(static_cast<std::size_t>(n * n), 0);
    auto mark = [&](int u, int v) { on_ham[static_cast<std::size_t>(u) * n + v] = 1; };
    for (int i = 0; i < n; ++i) {
        auto e = detail::ordered(omega[i], omega.at(i + 1));
        (i % 2 == 0 ? base.m1 : base.m2).push_back(e);
        mark(e.first, e.second);
    }
    for (auto e : gamma.edges())
        if (!on_ham[static_cast<std::size_t>(e.first) * n + e.second]) base.m3.push_back(e);

    detail::check_perfect_matching(gamma, base.m1, "M1");
    detail::check_perfect_matching(gamma, base.m2, "M2");
    detail::check_perfect_matching(gamma, base.m3, "M3");
    return base;
}

struct FamilyCycle {
    int cls = 0;  // 1, 2 or 3: component of gamma minus that matching
    CyclicSeq cycle;

    long long length() const { return cycle.size(); }
};

struct CycleFamily {
    std::vector<FamilyCycle> cycles;
};

namespace detail {
// components of a 2-regular graph as cycles: start each at its smallest
// vertex, walking toward the smaller neighbor
inline std::vector<CyclicSeq> two_factor_cycles(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) throw std::logic_error("two_factor_cycles: graph is not 2-regular");
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::vector<CyclicSeq> out;
    for (int s = 0; s < n; ++s) {
        if (used[static_cast<std::size_t>(s)]) continue;
        CyclicSeq c;
        int prev = -1, cur = s;
        do {
            used[static_cast<std::size_t>(cur)] = 1;
            c.verts.push_back(cur);
            const auto& nb = g.neighbors(cur);
            int next = (nb[0] == prev) ? nb[1] : (nb[1] == prev ? nb[0] : std::min(nb[0], nb[1]));
            prev = cur;
            cur = next;
        } while (cur != s);
        out.push_back(std::move(c));
    }
    return out;
}
}  // namespace detail

/// The cycles of the three 2-factors gamma - M_i. Each class partitions the
/// vertices, every member is an even cycle, class 3 is the Hamiltonian cycle
/// itself, and every edge of gamma lies on exactly two family cycles.
inline CycleFamily cycle_family(const CubicBase& base) {
    const int n = base.graph.vertex_count();
    CycleFamily fam;
    for (int cls = 1; cls <= 3; ++cls) {
        const auto& matching = cls == 1 ? base.m1 : cls == 2 ? base.m2 : base.m3;
        Graph g = base.graph;
        for (auto [u, v] : matching) g.remove_edge(u, v);
        int covered = 0;
        for (auto& c : detail::two_factor_cycles(g)) {
            if (c.size() % 2 != 0)
                throw std::logic_error("cycle_family: odd cycle in class " + std::to_string(cls));
            covered += c.size();
            fam.cycles.push_back({cls, std::move(c)});
        }
        if (covered != n)
            throw std::logic_error("cycle_family: class does not partition the vertices");
    }

    // class 3 must be exactly the Hamiltonian cycle
    {
        std::vector<const FamilyCycle*> k3;
        for (const auto& fc : fam.cycles)
            if (fc.cls == 3) k3.push_back(&fc);
        if (k3.size() != 1 || k3[0]->cycle.size() != n)
            throw std::logic_error("cycle_family: class 3 is not the Hamiltonian cycle");
    }

    // Obs 4.2: every edge lies on exactly two cycles, one from each of the
    // two classes not owning the edge's matching
    std::map<std::pair<int, int>, int> cover;
    for (const auto& fc : fam.cycles)
        for (int i = 0; i < fc.cycle.size(); ++i)
            ++cover[detail::ordered(fc.cycle[i], fc.cycle.at(i + 1))];
    for (auto e : base.graph.edges())
        if (cover[e] != 2)
            throw std::logic_error("cycle_family: edge " + std::to_string(e.first) + "-" +
                                   std::to_string(e.second) + " lies on " +
                                   std::to_string(cover[e]) + " cycles");
    return fam;
}

struct CycleRecord {
    int cls = 0;
    CyclicSeq cycle;              // in gamma's vertex IDs
    long long length = 0;
    int territory_vertices = 0;   // |V(T_K)| including the boundary
    std::vector<int> boundary_map;  // territory boundary index -> result vertex ID
    int interior_first = 0;
    int interior_count = 0;
    PerimeterSolution solution;   // canonical provider only
};

struct AuditReport {
    bool pass = true;
    bool gamma_induced = true;
    bool boundaries_match = true;
    bool interiors_anticomplete = true;
    bool interiors_clear_of_gamma = true;
    std::vector<std::string> violations;

    void fail(bool& flag, std::string msg) {
        pass = false;
        flag = false;
        violations.push_back(std::move(msg));
    }
};

struct Assembly {
    Graph result;
    CubicBase base;
    CycleFamily family;
    int t = 0;
    std::string provider;
    std::vector<CycleRecord> records;
    AuditReport audit;
};

inline AuditReport structural_audit(const Assembly& a);

/// Glues one territory of matching perimeter onto every family cycle.
/// provider "canonical" uses canonical_with_perimeter; provider "trivial"
/// attaches boundary-only territories (the result is gamma itself). The
/// boundary is identified with the cycle starting at its smallest vertex,
/// walking toward that vertex's smaller neighbor. All-or-nothing: if any
/// cycle length is infeasible the whole assembly fails, listing them all.
inline Assembly assemble_gt(const CubicBase& base, int t, const std::string& provider) {
    if (t < 5) throw std::invalid_argument("assemble_gt: need t >= 5");
    if (provider != "canonical" && provider != "trivial")
        throw std::invalid_argument("assemble_gt: unknown provider " + provider);

    Assembly a;
    a.base = base;
    a.family = cycle_family(base);
    a.t = t;
    a.provider = provider;

    std::map<long long, CanonicalPlan> plans;
    if (provider == "canonical") {
        std::map<long long, bool> feasible;
        std::string infeasible;
        for (const auto& fc : a.family.cycles) {
            const long long lam = fc.length();
            if (!feasible.count(lam)) {
                try {
                    plans.emplace(lam, canonical_with_perimeter(t, lam));
                    feasible[lam] = true;
                } catch (const infeasible_error&) {
                    feasible[lam] = false;
                }
            }
            if (!feasible[lam])
                infeasible += (infeasible.empty() ? "" : ", ") + std::string("class ") +
                              std::to_string(fc.cls) + " length " + std::to_string(lam);
        }
        if (!infeasible.empty())
            throw infeasible_error("territory_unavailable: no canonical territory for " +
                                   infeasible);
    }

    a.result = base.graph;
    a.result.labels.resize(static_cast<std::size_t>(a.result.vertex_count()));
    int cycle_index = 0;
    for (const auto& fc : a.family.cycles) {
        CycleRecord rec;
        rec.cls = fc.cls;
        rec.cycle = fc.cycle;
        rec.length = fc.length();

        // orientation anchor: boundary index 0 on the smallest cycle vertex,
        // index 1 toward its smaller neighbor
        const int L = fc.cycle.size();
        int anchor = 0;
        for (int i = 1; i < L; ++i)
            if (fc.cycle[i] < fc.cycle[anchor]) anchor = i;
        const int dir = fc.cycle.at(anchor + 1) < fc.cycle.at(anchor - 1) ? 1 : -1;
        rec.boundary_map.resize(static_cast<std::size_t>(L));
        for (int j = 0; j < L; ++j)
            rec.boundary_map[static_cast<std::size_t>(j)] = fc.cycle.at(anchor + dir * j);

        if (provider == "trivial") {
            rec.territory_vertices = L;
            rec.interior_first = a.result.vertex_count();
            rec.interior_count = 0;
        } else {
            const CanonicalPlan& plan = plans.at(rec.length);
            const Territory& T = plan.territory;
            rec.solution = plan.solution;
            rec.territory_vertices = T.graph.vertex_count();

            std::vector<int> translate(static_cast<std::size_t>(T.graph.vertex_count()), -1);
            for (int j = 0; j < L; ++j)
                translate[static_cast<std::size_t>(T.boundary[j])] =
                    rec.boundary_map[static_cast<std::size_t>(j)];
            rec.interior_count = T.graph.vertex_count() - L;
            rec.interior_first = a.result.add_vertices(rec.interior_count);
            int next_id = rec.interior_first;
            for (int v = 0; v < T.graph.vertex_count(); ++v) {
                if (translate[static_cast<std::size_t>(v)] >= 0) continue;
                translate[static_cast<std::size_t>(v)] = next_id;
                if (!T.graph.labels.empty())
                    a.result.labels[static_cast<std::size_t>(next_id)] =
                        "K" + std::to_string(cycle_index) + ":" +
                        T.graph.labels[static_cast<std::size_t>(v)];
                ++next_id;
            }
            for (int v = 0; v < T.graph.vertex_count(); ++v)
                for (int w : T.graph.neighbors(v)) {
                    if (w < v) continue;
                    // boundary-boundary edges already exist as cycle edges of gamma
                    const bool v_bd = translate[static_cast<std::size_t>(v)] < base.graph.vertex_count();
                    const bool w_bd = translate[static_cast<std::size_t>(w)] < base.graph.vertex_count();
                    if (v_bd && w_bd) continue;
                    a.result.add_edge(translate[static_cast<std::size_t>(v)],
                                      translate[static_cast<std::size_t>(w)]);
                }
        }
        a.records.push_back(std::move(rec));
        ++cycle_index;
    }

    a.audit = structural_audit(a);
    return a;
}

/// Checks that gamma sits inside the result as an induced subgraph, every
/// boundary matches its cycle edge for edge, and territory interiors are
/// anticomplete to each other and to the rest of gamma.
inline AuditReport structural_audit(const Assembly& a) {
    AuditReport rep;
    const Graph& g = a.result;
    const Graph& gamma = a.base.graph;
    const int ng = gamma.vertex_count();

    for (int u = 0; u < ng && rep.gamma_induced; ++u)
        for (int v = u + 1; v < ng; ++v)
            if (g.has_edge(u, v) != gamma.has_edge(u, v)) {
                rep.fail(rep.gamma_induced, "gamma not induced at " + std::to_string(u) + "-" +
                                                std::to_string(v));
                break;
            }

    for (std::size_t r = 0; r < a.records.size(); ++r) {
        const auto& rec = a.records[r];
        const int L = static_cast<int>(rec.boundary_map.size());
        for (int j = 0; j < L; ++j) {
            const int u = rec.boundary_map[static_cast<std::size_t>(j)];
            const int v = rec.boundary_map[static_cast<std::size_t>((j + 1) % L)];
            if (!g.has_edge(u, v) || !gamma.has_edge(u, v)) {
                rep.fail(rep.boundaries_match, "cycle " + std::to_string(r) +
                                                   " boundary edge " + std::to_string(u) + "-" +
                                                   std::to_string(v) + " missing");
                break;
            }
        }
    }

    // which record owns each interior vertex; -1 for gamma vertices
    std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t r = 0; r < a.records.size(); ++r)
        for (int v = a.records[r].interior_first;
             v < a.records[r].interior_first + a.records[r].interior_count; ++v)
            owner[static_cast<std::size_t>(v)] = static_cast<int>(r);

    for (int v = ng; v < g.vertex_count(); ++v) {
        const int r = owner[static_cast<std::size_t>(v)];
        const auto& rec = a.records[static_cast<std::size_t>(r)];
        for (int w : g.neighbors(v)) {
            if (w >= ng) {
                if (owner[static_cast<std::size_t>(w)] != r)
                    rep.fail(rep.interiors_anticomplete,
                             "interior edge across territories " + std::to_string(v) + "-" +
                                 std::to_string(w));
            } else {
                const bool on_cycle =
                    std::find(rec.boundary_map.begin(), rec.boundary_map.end(), w) !=
                    rec.boundary_map.end();
                if (!on_cycle)
                    rep.fail(rep.interiors_clear_of_gamma,
                             "interior vertex " + std::to_string(v) +
                                 " touches gamma vertex " + std::to_string(w) +
                                 " off its cycle");
            }
        }
    }
    return rep;
}

enum class PairVerdict { skipped, bullet1, bullet2, violation };

/// Checks one subpath pair against the two allowed intersection shapes:
/// a single shared vertex that ends one of the paths, or a shared edge,
/// with everything else anticomplete in gamma.
inline PairVerdict check_cycle_pair(const Graph& gamma, const std::vector<int>& l1,
                                    const std::vector<int>& l2) {
    std::vector<int> shared;
    for (int v : l1)
        if (std::find(l2.begin(), l2.end(), v) != l2.end()) shared.push_back(v);
    if (shared.empty()) return PairVerdict::skipped;

    auto anticomplete_rest = [&](const std::vector<int>& skip) {
        for (int x : l1) {
            if (std::find(skip.begin(), skip.end(), x) != skip.end()) continue;
            for (int y : l2) {
                if (std::find(skip.begin(), skip.end(), y) != skip.end()) continue;
                if (x == y || gamma.has_edge(x, y)) return false;
            }
        }
        return true;
    };

    if (shared.size() == 1) {
        const int u = shared[0];
        const bool is_end = l1.front() == u || l1.back() == u || l2.front() == u || l2.back() == u;
        if (is_end && anticomplete_rest({u})) return PairVerdict::bullet1;
        return PairVerdict::violation;
    }
    if (shared.size() == 2) {
        const int u = shared[0], v = shared[1];
        auto consecutive = [&](const std::vector<int>& l) {
            for (std::size_t i = 0; i + 1 < l.size(); ++i)
                if ((l[i] == u && l[i + 1] == v) || (l[i] == v && l[i + 1] == u)) return true;
            return false;
        };
        if (consecutive(l1) && consecutive(l2) && anticomplete_rest({u, v}))
            return PairVerdict::bullet2;
        return PairVerdict::violation;
    }
    return PairVerdict::violation;
}

struct Lemma43Report {
    int len_cap = 0;
    std::uint64_t sampled = 0;
    std::uint64_t intersecting = 0;
    std::uint64_t bullet1 = 0;
    std::uint64_t bullet2 = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// Samples subpath pairs from distinct family cycles and verifies the
/// two-bullet interaction shape. len_cap must stay below half the girth.
inline Lemma43Report lemma43_probe(const CubicBase& base, const CycleFamily& family, int len_cap,
                                   std::uint64_t samples = 2000, std::uint32_t seed = 0) {
    if (len_cap < 1 || 2 * len_cap >= base.girth)
        throw std::invalid_argument("lemma43_probe: len_cap must be below half the girth");
    Lemma43Report rep;
    rep.len_cap = len_cap;
    if (family.cycles.size() < 2) return rep;

    std::mt19937 rng(seed);
    auto subpath = [&](const CyclicSeq& c) {
        const int len = 1 + static_cast<int>(rng() % static_cast<std::uint32_t>(len_cap));
        const int start = static_cast<int>(rng() % static_cast<std::uint32_t>(c.size()));
        std::vector<int> p;
        for (int j = 0; j <= len; ++j) p.push_back(c.at(start + j));
        return p;
    };
    for (std::uint64_t s = 0; s < samples; ++s) {
        const std::size_t i = rng() % family.cycles.size();
        const std::size_t j = rng() % family.cycles.size();
        if (i == j) continue;
        ++rep.sampled;
        const auto l1 = subpath(family.cycles[i].cycle);
        const auto l2 = subpath(family.cycles[j].cycle);
        switch (check_cycle_pair(base.graph, l1, l2)) {
            case PairVerdict::skipped:
                break;
            case PairVerdict::bullet1:
                ++rep.intersecting;
                ++rep.bullet1;
                break;
            case PairVerdict::bullet2:
                ++rep.intersecting;
                ++rep.bullet2;
                break;
            case PairVerdict::violation: {
                ++rep.intersecting;
                std::string msg = "pair violates both bullets:";
                for (int v : l1) msg += " " + std::to_string(v);
                msg += " /";
                for (int v : l2) msg += " " + std::to_string(v);
                rep.violations.push_back(msg);
                break;
            }
        }
    }
    return rep;
}

struct FreenessProbe {
    bool attempted = false;
    SearchStatus status = SearchStatus::absent;
    bool free = false;
    bool outside_guarantee = false;  // failed below the full-scale girth bound
    std::vector<int> witness;
};

// saturating t^(5t); anything beyond the cap cannot be met at desk scale anyway
inline long long full_scale_girth(int t) {
    constexpr long long cap = 1LL << 62;
    long long g = 1;
    for (int i = 0; i < 5 * t; ++i) {
        if (g > cap / t) return cap;
        g *= t;
    }
    return g;
}

/// Attempts the C_{2t-2}-freeness check on the assembled graph. A failure is
/// flagged "outside guarantee" when the base girth is below the full-scale
/// bound t^(5t), which desk-scale bases always are.
inline FreenessProbe freeness_probe(const Assembly& a, const SearchLimits& limits = {},
                                    int vertex_cap = 20000) {
    FreenessProbe p;
    if (a.result.vertex_count() > vertex_cap) return p;
    p.attempted = true;
    const SearchResult r = find_induced_cycle(a.result, 2 * a.t - 2, limits);
    p.status = r.status;
    p.free = r.status == SearchStatus::absent;
    if (r.status == SearchStatus::found) {
        p.witness = r.witness;
        p.outside_guarantee = a.base.girth < full_scale_girth(a.t);
    }
    return p;
}

struct M3ProbeEntry {
    std::pair<int, int> edge;
    bool cycle1_found = false;
    bool cycle2_found = false;
    bool combined_induced = false;
};

struct M3ProbeReport {
    std::vector<M3ProbeEntry> entries;
    int passes = 0;

    bool all_pass() const { return passes == static_cast<int>(entries.size()); }
};

/// For each M3 edge e = uv, finds an induced t-cycle through e inside each of
/// the two territories whose cycles carry e, and checks that the two cycles
/// glue to an induced (2t-2)-cycle in G_t - e.
inline M3ProbeReport m3_criticality_probe(const Assembly& a, const SearchLimits& limits = {}) {
    M3ProbeReport rep;
    const int t = a.t;
    for (auto e : a.base.m3) {
        M3ProbeEntry entry;
        entry.edge = e;

        std::vector<std::vector<int>> halves;
        for (std::size_t r = 0; r < a.records.size() && halves.size() < 2; ++r) {
            const auto& rec = a.records[r];
            if (rec.cls == 3) continue;
            const bool on_cycle =
                std::find(rec.boundary_map.begin(), rec.boundary_map.end(), e.first) !=
                    rec.boundary_map.end() &&
                std::find(rec.boundary_map.begin(), rec.boundary_map.end(), e.second) !=
                    rec.boundary_map.end();
            if (!on_cycle) continue;

            std::vector<int> terr_verts = rec.boundary_map;
            for (int v = rec.interior_first; v < rec.interior_first + rec.interior_count; ++v)
                terr_verts.push_back(v);
            std::sort(terr_verts.begin(), terr_verts.end());
            Graph sub = induced_subgraph(a.result, terr_verts);
            auto local = [&](int v) {
                return static_cast<int>(std::lower_bound(terr_verts.begin(), terr_verts.end(), v) -
                                        terr_verts.begin());
            };
            const SearchResult sr =
                find_induced_cycle(sub, t, limits, std::make_pair(local(e.first), local(e.second)));
            if (sr.status != SearchStatus::found) {
                halves.push_back({});
                continue;
            }
            std::vector<int> cyc;
            for (int v : sr.witness) cyc.push_back(terr_verts[static_cast<std::size_t>(v)]);
            halves.push_back(std::move(cyc));
        }

        entry.cycle1_found = halves.size() >= 1 && !halves[0].empty();
        entry.cycle2_found = halves.size() >= 2 && !halves[1].empty();
        if (entry.cycle1_found && entry.cycle2_found) {
            // orient each t-cycle as a path from e.first to e.second that
            // avoids the edge itself, then splice
            auto as_path = [&](const std::vector<int>& cyc, int from, int to) {
                const int k = static_cast<int>(cyc.size());
                int pos = static_cast<int>(std::find(cyc.begin(), cyc.end(), from) - cyc.begin());
                const int step = cyc[static_cast<std::size_t>((pos + 1) % k)] == to ? -1 : 1;
                std::vector<int> path;
                for (int i = 0; i < k; ++i)
                    path.push_back(cyc[static_cast<std::size_t>(((pos + step * i) % k + k) % k)]);
                return path;  // from ... to, t vertices
            };
            const auto p1 = as_path(halves[0], e.first, e.second);
            const auto p2 = as_path(halves[1], e.second, e.first);
            CyclicSeq joined;
            joined.verts = p1;
            for (std::size_t i = 1; i + 1 < p2.size(); ++i) joined.verts.push_back(p2[i]);
            Graph minus = a.result;
            minus.remove_edge(e.first, e.second);
            entry.combined_induced =
                joined.size() == 2 * t - 2 && is_induced_cycle(minus, joined);
        }
        if (entry.combined_induced) ++rep.passes;
        rep.entries.push_back(std::move(entry));
    }
    return rep;
}

}  // namespace isat
