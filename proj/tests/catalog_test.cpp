#include "isat/catalog.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace isat;

namespace {
void expect_regular(const Graph& g, int degree) {
    for (int v = 0; v < g.vertex_count(); ++v) EXPECT_EQ(g.degree(v), degree) << "vertex " << v;
}
}  // namespace

TEST(Catalog, Icosahedron) {
    const Graph g = icosahedron();
    EXPECT_EQ(g.vertex_count(), 12);
    EXPECT_EQ(g.edge_count(), 30u);
    expect_regular(g, 5);
    EXPECT_EQ(girth(g), std::optional<int>(3));
}

TEST(Catalog, Dodecahedron) {
    const Graph g = dodecahedron();
    EXPECT_EQ(g.vertex_count(), 20);
    EXPECT_EQ(g.edge_count(), 30u);
    expect_regular(g, 3);
    EXPECT_EQ(girth(g), std::optional<int>(5));
}

TEST(Catalog, Petersen) {
    const Graph g = petersen();
    EXPECT_EQ(g.vertex_count(), 10);
    expect_regular(g, 3);
    EXPECT_EQ(girth(g), std::optional<int>(5));
    EXPECT_FALSE(testutil::has_hamiltonian_cycle(g));
}

// VD_5 matches the Petersen invariants: 10 vertices, 3-regular, girth 5
TEST(Catalog, Vd5LooksLikePetersen) {
    const Graph g = vd_graph(5);
    EXPECT_EQ(g.vertex_count(), 10);
    expect_regular(g, 3);
    EXPECT_EQ(girth(g), std::optional<int>(5));
}

// The u-side of VD_t is a t-cycle, the v-side its complement, joined by a
// perfect matching. Only t=5 is regular (the v-side has degree t-2).
TEST(Catalog, VdStructure) {
    for (int t = 3; t <= 12; ++t) {
        const Graph g = vd_graph(t);
        ASSERT_EQ(g.vertex_count(), 2 * t) << "t=" << t;
        for (int i = 0; i < t; ++i) {
            EXPECT_EQ(g.degree(i), 3) << "u-vertex, t=" << t;
            if (t > 3) {
                EXPECT_EQ(g.degree(t + i), t - 2) << "v-vertex, t=" << t;
            }
            EXPECT_TRUE(g.has_edge(i, t + i));
        }
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j) {
                const bool near = (j - i == 1) || (j - i == t - 1);
                EXPECT_EQ(g.has_edge(i, j), near);
                EXPECT_EQ(g.has_edge(t + i, t + j), !near);
            }
    }
}

TEST(Catalog, HexTorus) {
    for (auto [m, n] : {std::pair{4, 6}, {6, 8}, {6, 6}, {4, 8}, {8, 10}}) {
        const Graph g = hex_torus(m, n);
        EXPECT_EQ(g.vertex_count(), m * n);
        expect_regular(g, 3);
        EXPECT_EQ(girth(g), std::optional<int>(6)) << m << "x" << n;
    }
    // row cycles cap the girth at 4 when cols == 4
    EXPECT_EQ(girth(hex_torus(6, 4)), std::optional<int>(4));
    EXPECT_THROW(hex_torus(3, 6), std::invalid_argument);
    EXPECT_THROW(hex_torus(4, 5), std::invalid_argument);
}

TEST(Catalog, SmallFamilies) {
    EXPECT_EQ(cycle_graph(3).edge_count(), 3u);
    EXPECT_THROW(cycle_graph(2), std::invalid_argument);
    EXPECT_EQ(path_graph(1).vertex_count(), 1);
    EXPECT_EQ(complete_bipartite(3, 3).edge_count(), 9u);
    EXPECT_EQ(c5xc5().vertex_count(), 25);
    EXPECT_EQ(line_ktt(4).vertex_count(), 16);
    expect_regular(line_ktt(4), 6);
}

TEST(Catalog, CubicBases) {
    const std::vector<std::tuple<std::string, int, int>> expected = {
        {"k4", 4, 3},      {"k33", 6, 4},           {"cube", 8, 4},     {"heawood", 14, 6},
        {"mobius_kantor", 16, 6}, {"pappus", 18, 6}, {"desargues", 20, 6}};
    for (const auto& [name, n, g] : expected) {
        const BaseSpec spec = cubic_base(name);
        EXPECT_EQ(spec.graph.vertex_count(), n) << name;
        expect_regular(spec.graph, 3);
        EXPECT_EQ(girth(spec.graph), std::optional<int>(g)) << name;
        ASSERT_EQ(spec.ham.size(), n) << name;
        for (int i = 0; i < n; ++i)
            EXPECT_TRUE(spec.graph.has_edge(spec.ham[i], spec.ham.at(i + 1))) << name;
    }
}

TEST(Catalog, NamedGraphSpecs) {
    EXPECT_EQ(named_graph("petersen").vertex_count(), 10);
    EXPECT_EQ(named_graph("cycle(7)").vertex_count(), 7);
    EXPECT_EQ(named_graph("hex_torus(6,8)").vertex_count(), 48);
    EXPECT_EQ(named_graph("hex-torus(6, 8)").vertex_count(), 48);
    EXPECT_EQ(named_graph("complement(icosahedron)").edge_count(), 36u);
    EXPECT_EQ(named_graph("line_graph(complete_bipartite(3,3))").vertex_count(), 9);
    EXPECT_EQ(named_graph("cartesian(cycle(5),cycle(5))").vertex_count(), 25);
    EXPECT_THROW(named_graph("nonsense"), std::invalid_argument);
    EXPECT_THROW(named_graph("cycle(3,4)"), std::invalid_argument);
    EXPECT_THROW(named_graph("cycle()"), std::invalid_argument);
    EXPECT_THROW(named_graph("complement()"), std::invalid_argument);
    EXPECT_THROW(named_graph("petersen("), std::invalid_argument);
}
