#include "mtk/errors.hpp"
#include "mtk/linalg.hpp"
#include "mtk/polynomial.hpp"
#include "mtk/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mtk;

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
    EXPECT_EQ(to_string(parse_rational("-7")), "-7");
    EXPECT_EQ(to_string(parse_rational("0/5")), "0");
    EXPECT_THROW(parse_rational("1/0"), ParseError);
    EXPECT_THROW(parse_rational("x"), ParseError);
    EXPECT_THROW(parse_rational("1.5"), ParseError);
}

TEST(Rational, BinomialOutOfRangeIsZero) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(-3, 1), 0);
    EXPECT_EQ(factorial(10), 3628800);
}

TEST(Linalg, DeterminantMatchesCofactorExpansion) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> e(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m(3, IntVec(3));
        for (auto& row : m)
            for (auto& x : row) x = e(rng);
        long long cof = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        EXPECT_EQ(determinant(m), cof);
    }
}

TEST(Linalg, AdjugateTimesMatrixIsDetIdentity) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> e(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        IntMatrix m(4, IntVec(4));
        for (auto& row : m)
            for (auto& x : row) x = e(rng);
        if (determinant(m) == 0) {
            EXPECT_THROW(adjugate(m), PreconditionError);
            continue;
        }
        BigInt det;
        BigMatrix adj = adjugate(m, &det);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                BigInt s = 0;
                for (int k = 0; k < 4; ++k) s += adj[i][k] * m[k][j];
                EXPECT_EQ(s, i == j ? det : BigInt(0));
            }
    }
}

TEST(Linalg, RankOfDependentRows) {
    IntMatrix m{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    EXPECT_EQ(rank(m), 2u);
    QMatrix q{{Rational(1, 2), 1}, {1, 2}};
    EXPECT_EQ(rank(q), 1u);
}

TEST(Polynomial, InterpolationRecoversCubic) {
    Polynomial p{{Rational(1), Rational(-2, 3), Rational(0), Rational(5, 7)}};
    std::vector<Rational> xs, ys;
    for (int x = 0; x < 6; ++x) {
        xs.push_back(x);
        ys.push_back(p(x));
    }
    Polynomial q = interpolate(xs, ys);
    EXPECT_EQ(q, p);
    EXPECT_EQ(q.degree(), 3);
}
