#include "isat/territory.hpp"

#include <gtest/gtest.h>

#include <random>

#include "isat/detect.hpp"
#include "isat/json_io.hpp"

using namespace isat;

namespace {

// saturating t^e, large enough to stand in for the theorem's bound
long long sat_pow(long long t, long long e) {
    constexpr long long cap = 1LL << 62;
    long long r = 1;
    for (long long i = 0; i < e; ++i) {
        if (r > cap / t) return cap;
        r *= t;
    }
    return r;
}

// random stable set of boundary positions, seeded
ExpansionSpec random_spec(const Territory& T, int want_k, std::mt19937& rng) {
    const int L = static_cast<int>(T.perimeter());
    std::vector<char> blocked(static_cast<std::size_t>(L), 0);
    ExpansionSpec spec;
    int attempts = 0;
    while (spec.k() < want_k && attempts++ < 20 * want_k) {
        const int p = static_cast<int>(rng() % static_cast<std::uint32_t>(L));
        if (blocked[static_cast<std::size_t>(p)]) continue;
        spec.positions.push_back(p);
        blocked[static_cast<std::size_t>(p)] = 1;
        blocked[static_cast<std::size_t>((p + 1) % L)] = 1;
        blocked[static_cast<std::size_t>((p + L - 1) % L)] = 1;
    }
    for (int i = 0; i < spec.k(); ++i)
        if (rng() % 2) spec.gadgets.push_back(i);
    return spec;
}

int boundary_distance(const Territory& T, int i, int j) {
    const int L = static_cast<int>(T.perimeter());
    const int d = std::abs(i - j);
    return std::min(d, L - d);
}

}  // namespace

TEST(BaseTerritory, IsAPlainCycle) {
    const Territory T = base_territory(5);
    EXPECT_EQ(T.perimeter(), 5);
    EXPECT_EQ(T.graph.vertex_count(), 5);
    EXPECT_TRUE(validate_territory(T).ok);
    EXPECT_EQ(base_territory(6).perimeter(), 6);
    EXPECT_THROW(base_territory(4), std::invalid_argument);
}

TEST(GrowCanonical, FirstRing) {
    const Territory T = grow_canonical(base_territory(5));
    EXPECT_EQ(T.graph.vertex_count(), 15);
    EXPECT_EQ(T.perimeter(), 10);
    EXPECT_EQ(T.rings, 1);
    EXPECT_TRUE(validate_territory(T).ok);
}

TEST(GrowCanonical, ThreeRingsReachPerimeter40) {
    Territory T = base_territory(5);
    for (int i = 0; i < 3; ++i) T = grow_canonical(T);
    EXPECT_EQ(T.perimeter(), 40);  // 5 * 2^3
    EXPECT_TRUE(validate_territory(T).ok);
}

TEST(GrowCanonical, T6Ring) {
    const Territory T = grow_canonical(base_territory(6));
    EXPECT_EQ(T.perimeter(), 18);
    EXPECT_EQ(T.graph.vertex_count(), 24);
}

TEST(Canonical, VertexCounts) {
    EXPECT_EQ(canonical(5, 2).graph.vertex_count(), 35);  // 5 + 10 + 20
    EXPECT_EQ(canonical(5, 2).perimeter(), 20);
    EXPECT_EQ(canonical(5, 0).perimeter(), 5);
    EXPECT_EQ(canonical(6, 2).graph.vertex_count(), 78);  // 6 + 18 + 54
    EXPECT_EQ(canonical(6, 2).perimeter(), 54);

    for (int t : {5, 6, 7})
        for (int m = 0; m <= 3; ++m) {
            long long want = 0, ring = t;
            for (int j = 0; j <= m; ++j, ring *= (t - 3)) want += ring;
            EXPECT_EQ(canonical(t, m).graph.vertex_count(), want) << "t=" << t << " m=" << m;
        }
}

// degree profile of the ringed core: outermost subdivision vertices have
// degree 2, outermost branch and all inner subdivision vertices 3, inner
// branch vertices 4 (ring plus a spoke in each direction)
TEST(Canonical, DegreeHistogram) {
    const Territory T = canonical(5, 2);
    std::map<int, int> hist;
    for (int v = 0; v < T.graph.vertex_count(); ++v) ++hist[T.graph.degree(v)];
    EXPECT_EQ(hist[2], 10);  // ring-2 subdivision vertices
    EXPECT_EQ(hist[3], 20);  // base cycle, ring-1 subdivision, ring-2 branch
    EXPECT_EQ(hist[4], 5);   // ring-1 branch vertices
    EXPECT_EQ(hist.size(), 3u);
}

TEST(Expand, FigureThreeShape) {
    // perimeter 10, k=3, two gadgets: 10 + 4*1 + 5*2 = 24
    const Territory T = canonical(5, 1);
    ExpansionSpec spec;
    spec.positions = {0, 2, 4};
    spec.gadgets = {1, 2};
    const Territory E = expand(T, spec);
    EXPECT_EQ(E.perimeter(), 24);
    EXPECT_TRUE(validate_territory(E).ok);
    EXPECT_TRUE(E.expanded);
}

TEST(Expand, EmptySpecIsIdentity) {
    const Territory T = canonical(5, 1);
    const Territory E = expand(T, {});
    EXPECT_EQ(E.perimeter(), T.perimeter());
    EXPECT_EQ(E.graph.vertex_count(), T.graph.vertex_count());
    EXPECT_EQ(E.boundary, T.boundary);
}

TEST(Expand, SinglePlainDetour) {
    const Territory T = canonical(5, 1);
    ExpansionSpec spec;
    spec.positions = {0};
    const Territory E = expand(T, spec);
    EXPECT_EQ(E.perimeter(), 14);
    // the detour path contributes 2t-5 = 5 fresh vertices
    EXPECT_EQ(E.graph.vertex_count(), T.graph.vertex_count() + 5);
    EXPECT_TRUE(validate_territory(E).ok);
}

TEST(Expand, RejectsBadSpecs) {
    const Territory T = canonical(5, 1);
    ExpansionSpec adjacent;
    adjacent.positions = {0, 1};
    EXPECT_THROW(expand(T, adjacent), std::invalid_argument);

    ExpansionSpec wrap;
    wrap.positions = {0, 9};  // cyclically adjacent on a 10-cycle
    EXPECT_THROW(expand(T, wrap), std::invalid_argument);

    const Territory base5 = base_territory(5);
    ExpansionSpec too_many;
    too_many.positions = {0, 2, 4};  // 2k = 6 > 5
    EXPECT_THROW(expand(base5, too_many), std::invalid_argument);

    ExpansionSpec bad_gadget;
    bad_gadget.positions = {0};
    bad_gadget.gadgets = {1};
    EXPECT_THROW(expand(T, bad_gadget), std::invalid_argument);

    Territory chorded = canonical(5, 1);
    chorded.graph.add_edge(chorded.boundary[0], chorded.boundary[3]);
    ExpansionSpec one;
    one.positions = {0};
    EXPECT_THROW(expand(chorded, one), std::invalid_argument);
    EXPECT_THROW(grow_canonical(chorded), std::invalid_argument);
}

TEST(Expand, PerimeterLawOnRandomSpecs) {
    std::mt19937 rng(31337);
    for (int t : {5, 6, 7}) {
        for (int m = 0; m <= 2; ++m) {
            const Territory T = canonical(t, m);
            for (int trial = 0; trial < 6; ++trial) {
                const int want = 1 + static_cast<int>(rng() % 4);
                const ExpansionSpec spec = random_spec(T, want, rng);
                const Territory E = expand(T, spec);
                const long long gadgets = static_cast<long long>(spec.gadgets.size());
                EXPECT_EQ(E.perimeter(), T.perimeter() + (2 * t - 6) * (spec.k() - gadgets) +
                                             (3 * t - 10) * gadgets);
                EXPECT_TRUE(validate_territory(E).ok)
                    << "t=" << t << " m=" << m << " trial=" << trial;

                // boundary vertices close in the graph stay close along the
                // boundary: dist_B <= t^(dist_T + 3t) on every expansion built
                const int L = static_cast<int>(E.perimeter());
                for (int i = 0; i < L; ++i) {
                    const auto dist = bfs_distances(E.graph, E.boundary[i]);
                    for (int j = i + 1; j < L; ++j) {
                        const int d = dist[static_cast<std::size_t>(E.boundary[j])];
                        ASSERT_LE(boundary_distance(E, i, j), sat_pow(t, d + 3 * t));
                    }
                }
            }
        }
    }
}

TEST(ExpansionParams, Fixtures) {
    EXPECT_EQ(expansion_params(5, 10, 24), std::make_optional(std::make_pair(1LL, 2LL)));
    EXPECT_EQ(expansion_params(5, 10, 11), std::nullopt);
    EXPECT_EQ(expansion_params(5, 10, 10), std::make_optional(std::make_pair(0LL, 0LL)));
}

// the one-dimensional scan matches a full two-dimensional feasibility scan,
// and feasible answers are actually constructible
TEST(ExpansionParams, AgreesWithFullScanAndConstruction) {
    for (int t : {5, 6}) {
        const Territory T = canonical(t, 1);
        const long long lp = T.perimeter();
        for (long long lam = lp; lam <= lp + 40; ++lam) {
            bool feasible2d = false;
            for (long long s1 = 0; (2 * t - 6) * s1 <= lam - lp && !feasible2d; ++s1)
                for (long long s2 = 0; (2 * t - 6) * s1 + (3 * t - 10) * s2 <= lam - lp; ++s2)
                    if ((2 * t - 6) * s1 + (3 * t - 10) * s2 == lam - lp &&
                        2 * (s1 + s2) <= lp) {
                        feasible2d = true;
                        break;
                    }
            const auto params = expansion_params(t, lp, lam);
            ASSERT_EQ(params.has_value(), feasible2d) << "t=" << t << " lambda=" << lam;
            if (params) {
                const auto [s1, s2] = *params;
                ExpansionSpec spec;
                const long long count = s1 + s2;
                if (count > 0) {
                    const long long spacing = lp / count;
                    for (long long i = 0; i < count; ++i)
                        spec.positions.push_back(static_cast<int>(i * spacing));
                    for (long long i = 0; i < s2; ++i)
                        spec.gadgets.push_back(static_cast<int>(i));
                }
                EXPECT_EQ(expand(T, spec).perimeter(), lam);
            }
        }
    }
}

TEST(CanonicalWithPerimeter, TheoremBranchFixtures) {
    // hand-worked: lambda=126, t=5: m=4, d=23, q=11, r=2, s1=9, s2=2
    const CanonicalPlan p126 = canonical_with_perimeter(5, 126);
    EXPECT_EQ(p126.solution.m, 4);
    EXPECT_EQ(p126.solution.d, 23);
    EXPECT_EQ(p126.solution.q, 11);
    EXPECT_EQ(p126.solution.r, 2);
    EXPECT_EQ(p126.solution.s1, 9);
    EXPECT_EQ(p126.solution.s2, 2);
    EXPECT_EQ(p126.territory.perimeter(), 126);
    EXPECT_TRUE(validate_territory(p126.territory).ok);

    // lambda=160: d=40, q=20, r=0, s1=15, s2=4
    const CanonicalPlan p160 = canonical_with_perimeter(5, 160);
    EXPECT_EQ(p160.solution.m, 4);
    EXPECT_EQ(p160.solution.s1, 15);
    EXPECT_EQ(p160.solution.s2, 4);
    EXPECT_EQ(p160.territory.perimeter(), 160);
}

TEST(CanonicalWithPerimeter, SmallFallback) {
    const CanonicalPlan p14 = canonical_with_perimeter(5, 14);
    EXPECT_EQ(p14.solution.m, 0);
    EXPECT_EQ(p14.solution.s1, 1);
    EXPECT_EQ(p14.solution.s2, 1);
    EXPECT_EQ(p14.territory.perimeter(), 14);
    EXPECT_EQ(p14.territory.graph.vertex_count(), 17);  // 5 + 5 + 7

    EXPECT_THROW(canonical_with_perimeter(5, 16), infeasible_error);
    EXPECT_THROW(canonical_with_perimeter(5, 15), infeasible_error);  // odd
    EXPECT_THROW(canonical_with_perimeter(5, 4), infeasible_error);
}

// far beyond the small sweeps: the closed-form branch at a six-digit
// perimeter, checked with a linear boundary walk
TEST(CanonicalWithPerimeter, ScaleSmoke) {
    const long long lambda = 100000;
    const CanonicalPlan plan = canonical_with_perimeter(5, lambda);
    EXPECT_EQ(plan.territory.perimeter(), lambda);
    const auto& T = plan.territory;
    const int L = static_cast<int>(T.perimeter());
    for (int i = 0; i < L; ++i)
        ASSERT_TRUE(T.graph.has_edge(T.boundary[i], T.boundary.at(i + 1))) << i;
    long long lam_m = 5;
    for (int i = 0; i < plan.solution.m; ++i) lam_m *= 2;
    EXPECT_EQ(4 * plan.solution.s1 + 5 * plan.solution.s2, lambda - lam_m);
    EXPECT_LE(2 * (plan.solution.s1 + plan.solution.s2), lam_m);
}

TEST(TerritoryJson, RoundTrip) {
    const Territory T = canonical_with_perimeter(5, 24).territory;
    const Territory back = territory_from_json(territory_to_json(T));
    EXPECT_EQ(back.t, T.t);
    EXPECT_EQ(back.graph, T.graph);
    EXPECT_EQ(back.boundary, T.boundary);
    EXPECT_EQ(back.graph.labels, T.graph.labels);
    EXPECT_TRUE(validate_territory(back).ok);
}

TEST(ValidateTerritory, DetectsChords) {
    Territory T = canonical(5, 1);
    EXPECT_TRUE(validate_territory(T).ok);
    // add a chord across the boundary ring
    T.graph.add_edge(T.boundary[0], T.boundary[3]);
    const auto diag = validate_territory(T);
    EXPECT_FALSE(diag.ok);
    ASSERT_FALSE(diag.issues.empty());
    EXPECT_NE(diag.issues[0].find("chord"), std::string::npos);
}

TEST(Freeness, SmallCanonicalCores) {
    EXPECT_EQ(find_induced_cycle(canonical(5, 1).graph, 8).status, SearchStatus::absent);
    EXPECT_EQ(find_induced_cycle(canonical(5, 2).graph, 8).status, SearchStatus::absent);
    EXPECT_EQ(find_induced_cycle(canonical(6, 1).graph, 10).status, SearchStatus::absent);
}

TEST(DistanceBound, UnexpandedSmall) {
    for (auto [t, m] : {std::pair{5, 1}, {5, 2}, {6, 1}}) {
        const Territory T = canonical(t, m);
        const int L = static_cast<int>(T.perimeter());
        for (int i = 0; i < L; ++i) {
            const auto dist = bfs_distances(T.graph, T.boundary[i]);
            for (int j = i + 1; j < L; ++j) {
                const int d = dist[static_cast<std::size_t>(T.boundary[j])];
                ASSERT_GT(d, 0);
                EXPECT_LE(boundary_distance(T, i, j), sat_pow(t - 2, d))
                    << "t=" << t << " m=" << m;
            }
        }
    }
}

TEST(DistanceBound, ExpandedForm) {
    const Territory E = canonical_with_perimeter(5, 24).territory;
    const int L = static_cast<int>(E.perimeter());
    for (int i = 0; i < L; ++i) {
        const auto dist = bfs_distances(E.graph, E.boundary[i]);
        for (int j = i + 1; j < L; ++j) {
            const int d = dist[static_cast<std::size_t>(E.boundary[j])];
            EXPECT_LE(boundary_distance(E, i, j), sat_pow(5, d + 15));
        }
    }
}

// every non-boundary edge of a canonical territory opens an induced
// (2t-2)-cycle when removed; every boundary edge lies on an induced t-cycle
TEST(EdgeObservations, Canonical51) {
    const Territory T = canonical(5, 1);
    std::vector<char> on_boundary(static_cast<std::size_t>(T.graph.vertex_count()), 0);
    std::vector<std::pair<int, int>> boundary_edges;
    const int L = static_cast<int>(T.perimeter());
    for (int i = 0; i < L; ++i)
        boundary_edges.emplace_back(std::min(T.boundary[i], T.boundary.at(i + 1)),
                                    std::max(T.boundary[i], T.boundary.at(i + 1)));

    for (auto e : T.graph.edges()) {
        const bool is_boundary =
            std::find(boundary_edges.begin(), boundary_edges.end(), e) != boundary_edges.end();
        if (is_boundary) {
            const auto r = find_induced_cycle(T.graph, 5, {}, e);
            EXPECT_EQ(r.status, SearchStatus::found)
                << "boundary edge " << e.first << "-" << e.second;
        } else {
            Graph h = T.graph;
            h.remove_edge(e.first, e.second);
            const auto r = find_induced_cycle(h, 8, {}, e);
            EXPECT_EQ(r.status, SearchStatus::found)
                << "interior edge " << e.first << "-" << e.second;
        }
    }
}
