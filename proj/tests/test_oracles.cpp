#include "mtk/catalog.hpp"
#include "mtk/errors.hpp"
#include "mtk/oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace mtk;

namespace {

std::set<Basis> trees_of(const Matroid& g) {
    std::set<Basis> out;
    matsui_spanning_trees(g, [&](const Basis& b) { EXPECT_TRUE(out.insert(b).second) << "duplicate tree"; });
    return out;
}

}  // namespace

TEST(Oracles, SolidsTreeCounts) {
    EXPECT_EQ(trees_of(complete_graph(4)).size(), 16u);
    EXPECT_EQ(trees_of(cube_graph()).size(), 384u);
    EXPECT_EQ(trees_of(octahedron_graph()).size(), 384u);
    EXPECT_EQ(laplacian_tree_count(cube_graph()), 384);
    EXPECT_EQ(laplacian_tree_count(complete_graph(6)), 1296);
}

TEST(OraclesProperty, MatsuiEqualsBasisEnumeration) {
    std::mt19937_64 rng(301);
    for (int trial = 0; trial < 30; ++trial) {
        Matroid g = gen::random_graph(rng, 2, 7, 0.4);
        auto trees = trees_of(g);
        auto bases = enumerate_bases(g);
        ASSERT_EQ(std::set<Basis>(bases.begin(), bases.end()), trees);
        ASSERT_EQ(laplacian_tree_count(g), trees.size());
    }
}

TEST(Oracles, MatsuiNeedsConnectedGraph) {
    EXPECT_THROW(matsui_spanning_trees(Matroid::from_adjacency({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}), [](const Basis&) {}),
                 PreconditionError);
    EXPECT_THROW(matsui_spanning_trees(Matroid::uniform(3, 2), [](const Basis&) {}), PreconditionError);
}

TEST(OraclesProperty, ProjectedSetMultiplicities) {
    std::mt19937_64 rng(302);
    for (int trial = 0; trial < 20; ++trial) {
        Matroid m = gen::random_matroid(rng, 7);
        WeightMatrix w = gen::random_weights(rng, 2, m.size());
        auto set = exact_projected_set(m, w);
        std::uint64_t total = 0;
        for (const auto& [p, c] : set) total += c;
        EXPECT_EQ(total, enumerate_bases(m).size());
    }
}

TEST(Oracles, HullOfSquareWithInteriorAndEdgePoints) {
    std::vector<Point> pts{{0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {1, 0}, {2, 1}};
    EXPECT_EQ(planar_convex_hull(pts), (std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    EXPECT_EQ(planar_convex_hull({{3, 3}, {3, 3}}), (std::vector<Point>{{3, 3}}));
}

TEST(OraclesProperty, DilationCountsBaseCases) {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 15; ++trial) {
        Matroid m = gen::random_matroid(rng, 6);
        EXPECT_EQ(dilation_lattice_count(m, 0), 1u);
        EXPECT_EQ(dilation_lattice_count(m, 1), enumerate_bases(m).size());
        for (long long k = 0; k <= 3; ++k)
            EXPECT_EQ(dilation_lattice_count(m, k, Exec::parallel), dilation_lattice_count(m, k, Exec::serial));
    }
}

TEST(Oracles, DilationCountMatchesBruteForce) {
    // 2 P(U^{2,4}) : x in {0,1,2}^4, sum 4, every x_i <= 2.
    std::uint64_t brute = 0;
    for (int a = 0; a < 81; ++a) {
        int x[4] = {a % 3, a / 3 % 3, a / 9 % 3, a / 27};
        if (x[0] + x[1] + x[2] + x[3] == 4) ++brute;
    }
    EXPECT_EQ(dilation_lattice_count(Matroid::uniform(4, 2), 2), brute);
}

TEST(Oracles, InterpolationDetectsDisagreement) {
    LatticeCountTable t{{1, 6, 19, 44, 85}};
    EXPECT_NO_THROW(interpolate_ehrhart(t, 3));
    t.counts.push_back(1000);
    EXPECT_THROW(interpolate_ehrhart(t, 3), InconsistencyError);
}
