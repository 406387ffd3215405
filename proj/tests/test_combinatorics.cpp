#include "mtk/catalog.hpp"
#include "mtk/combinatorics.hpp"
#include "mtk/errors.hpp"
#include "mtk/oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace mtk;

namespace {

const IntMatrix kSixBySix{{1, 1, 0, 0, 1, 0}, {1, 1, 0, 0, 0, 1}, {1, 0, 1, 1, 0, 0},
                          {0, 1, 1, 1, 0, 0}, {0, 0, 1, 0, 1, 1}, {0, 0, 0, 1, 1, 1}};

// n linearly independent basis vectors of m, chosen at random.
std::optional<IntMatrix> random_collection(const Matroid& m, std::mt19937_64& rng) {
    auto bases = enumerate_bases(m);
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::shuffle(bases.begin(), bases.end(), rng);
        IntMatrix x;
        for (const auto& b : bases) {
            x.push_back(incidence(b, m.size()));
            if (rank(x) < x.size()) x.pop_back();
            if (static_cast<int>(x.size()) == m.size()) return x;
        }
    }
    return std::nullopt;
}

}  // namespace

TEST(Combinatorics, SixBySixExample) {
    ReducedDeterminant r = reduced_determinant(kSixBySix);
    BigMatrix expect{{2, 0, 1}, {1, 2, 0}, {0, 1, 2}};
    EXPECT_EQ(r.matrix, expect);
    EXPECT_EQ(r.abs_det, 9);
    EXPECT_EQ(abs(determinant(kSixBySix)), 9);
    ExchangeGraphs g = exchange_graphs(kSixBySix);
    EXPECT_EQ(g.row_components.size(), 3u);
    EXPECT_EQ(g.column_components.size(), 3u);
}

TEST(CombinatoricsProperty, ComponentEqualityAndReducedDeterminant) {
    std::mt19937_64 rng(701);
    std::vector<Matroid> pool;
    for (auto& e : connected_catalog(6))
        if (e.matroid.rank() > 1 && e.matroid.rank() < e.matroid.size() - 1) pool.push_back(e.matroid);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Matroid& m = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
        auto x = random_collection(m, rng);
        if (!x) continue;
        ExchangeGraphs g = exchange_graphs(*x);
        ASSERT_EQ(g.row_components.size(), g.column_components.size());
        ReducedDeterminant r = reduced_determinant(*x);
        ASSERT_EQ(r.abs_det, abs(determinant(*x)));
        if (g.row_components.size() == 1) ASSERT_EQ(r.abs_det, m.rank());
        ++checked;
    }
    EXPECT_GT(checked, 150);
}

TEST(Combinatorics, RankComponentRelation) {
    IntMatrix x{{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}};
    RankComponents rc = rank_component_relation(x);
    EXPECT_EQ(rc.rank, 3u);
    EXPECT_EQ(rc.column_components, 2u);
    EXPECT_THROW(rank_component_relation({{1, 1, 0, 0}, {0, 0, 1, 1}}), PreconditionError);
}

TEST(CombinatoricsProperty, RankPlusComponentsIsN) {
    std::mt19937_64 rng(702);
    for (int trial = 0; trial < 60; ++trial) {
        Matroid m = gen::random_uniform(rng, 6);
        auto bases = enumerate_bases(m);
        std::shuffle(bases.begin(), bases.end(), rng);
        const std::size_t take = std::uniform_int_distribution<std::size_t>(1, bases.size())(rng);
        IntMatrix x;
        for (std::size_t i = 0; i < take; ++i) x.push_back(incidence(bases[i], m.size()));
        ExchangeGraphs g = exchange_graphs(x);
        if (g.row_components.size() != 1) continue;
        // a connected exchange graph spans differences of rank n - #components(g), plus one root row
        ASSERT_EQ(rank(x) + g.column_components.size(), static_cast<std::size_t>(m.size()) + 1);
    }
}

TEST(Combinatorics, TwoFaceSquareOfDirectSum) {
    Matroid m = Matroid::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}});
    EXPECT_EQ(classify_square_2face(m, {1, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}), TwoFace::square);
}

TEST(Combinatorics, TwoFaceInUniformIsNotAFace) {
    Matroid m = Matroid::uniform(4, 2);
    // w1 = {1,3}; s=2,t=1 ; m=4,l=3 ; w4 = {2,4}; {1,4} and {2,3} are also bases
    EXPECT_EQ(classify_square_2face(m, {1, 0, 1, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}), TwoFace::not_a_face);
}

TEST(Combinatorics, TwoFaceRejectsMalformedQuadruple) {
    Matroid m = Matroid::uniform(4, 2);
    EXPECT_THROW(classify_square_2face(m, {1, 0, 1, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}), PreconditionError);
    EXPECT_THROW(classify_square_2face(m, {1, 0, 1}, {0, 1, 1, 0}, {1, 0, 0, 1}, {0, 1, 0, 1}), DimensionError);
}

TEST(Combinatorics, ConnectedMatroids) {
    EXPECT_TRUE(is_connected_matroid(complete_graph(4)));
    EXPECT_FALSE(is_connected_matroid(Matroid::from_rows({{1, 1, 0, 0}, {0, 0, 1, 1}})));
    for (auto& e : connected_catalog(6)) EXPECT_TRUE(is_connected_matroid(e.matroid)) << e.name;
}

TEST(Combinatorics, InputValidation) {
    EXPECT_THROW(exchange_graphs({{1, 0}, {1, 0}}), PreconditionError);
    EXPECT_THROW(exchange_graphs({{1, 2}}), PreconditionError);
    EXPECT_THROW(reduced_determinant({{1, 1, 0}, {0, 1, 1}}), DimensionError);
}
