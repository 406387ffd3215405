#include "mtk/errors.hpp"
#include "mtk/multicriteria.hpp"
#include "mtk/oracles.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace mtk;

TEST(Multicriteria, ObjectivesAreExact) {
    Point p{3, -1};
    EXPECT_EQ(Objective::linear({Rational(1, 2), 2})(p), Rational(-1, 2));
    EXPECT_EQ(Objective::squared_distance({1, 1})(p), 8);
    EXPECT_EQ(Objective::quartic_distance({1, 1})(p), 32);
    EXPECT_EQ(Objective::minmax()(p), 3);
    EXPECT_EQ(Objective::squared_distance({Rational(1, 2), 0})(Point{0, 0}), Rational(1, 4));
    Objective c = Objective::custom([](const Point& q) { return Rational(q[0] * q[1]); }, "product");
    EXPECT_EQ(c(p), -3);
}

TEST(Multicriteria, ParetoFilter) {
    std::vector<Point> pts{{1, 5}, {2, 2}, {3, 3}, {5, 1}, {2, 2}, {1, 6}};
    EXPECT_EQ(pareto_filter(pts), (std::vector<Point>{{1, 5}, {2, 2}, {5, 1}}));
    EXPECT_TRUE(dominates({1, 1}, {1, 2}));
    EXPECT_FALSE(dominates({1, 1}, {1, 1}));
}

TEST(MulticriteriaProperty, ParetoPointsAreUndominatedAndCover) {
    std::mt19937_64 rng(201);
    std::uniform_int_distribution<int> e(0, 9);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Point> pts(15, Point(3));
        for (auto& p : pts)
            for (auto& x : p) x = e(rng);
        auto front = pareto_filter(pts);
        for (const auto& p : front)
            for (const auto& q : pts) ASSERT_FALSE(dominates(q, p));
        for (const auto& q : pts) {
            bool covered = false;
            for (const auto& p : front) covered |= (p == q || dominates(p, q));
            ASSERT_TRUE(covered);
        }
    }
}

TEST(MulticriteriaProperty, BoundingBoxIsTight) {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 25; ++trial) {
        Matroid m = gen::random_matroid(rng, 7);
        WeightMatrix w = gen::random_weights(rng, 3, m.size(), -5, 10);
        BoundingBox box = bounding_box(m, w);
        IntVec lo(3, std::numeric_limits<long long>::max()), hi(3, std::numeric_limits<long long>::min());
        for (const auto& b : enumerate_bases(m)) {
            Point p = w.project(b);
            ASSERT_TRUE(box.contains(p));
            for (int i = 0; i < 3; ++i) {
                lo[i] = std::min(lo[i], p[i]);
                hi[i] = std::max(hi[i], p[i]);
            }
        }
        EXPECT_EQ(box.lo, lo);
        EXPECT_EQ(box.hi, hi);
    }
}

TEST(Multicriteria, WeightShapeMismatch) {
    WeightMatrix w({{1, 2, 3}});
    EXPECT_THROW(w.check_matches(Matroid::uniform(4, 2)), DimensionError);
    EXPECT_THROW(WeightMatrix({{1, 2}, {1}}), DimensionError);
}
