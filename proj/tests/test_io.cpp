#include "mtk/errors.hpp"
#include "mtk/io.hpp"
#include "mtk/multicriteria.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace mtk;

namespace {

Matroid parse(const std::string& text) {
    std::istringstream in(text);
    return parse_matroid(in);
}

void expect_parse_error_at(const std::string& text, std::size_t line, std::size_t column) {
    try {
        parse(text);
        FAIL() << "no error for:\n" << text;
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), line) << e.what();
        EXPECT_EQ(e.column(), column) << e.what();
    }
}

}  // namespace

TEST(Io, ParsesAllThreeFormats) {
    Matroid g = parse("graph 3\n0 1 1\n1 0 1\n1 1 0\n");
    EXPECT_EQ(g.size(), 3);
    EXPECT_EQ(g.rank(), 2);
    Matroid v = parse("# comment\nvector 2 3\n1 0 1/2\n0 1 -1\n");
    EXPECT_EQ(v.size(), 3);
    EXPECT_EQ(v.rank(), 2);
    Matroid u = parse("uniform 5 3\n");
    EXPECT_EQ(u.size(), 5);
    EXPECT_EQ(u.rank(), 3);
}

TEST(Io, ErrorsCarryLineAndColumn) {
    expect_parse_error_at("graph 2\n0 1\n1 x\n", 3, 3);
    expect_parse_error_at("vector 2 2\n1 0\n0\n", 3, 1);
    expect_parse_error_at("matrix 2 2\n", 1, 1);
    expect_parse_error_at("uniform 4 2\n1 2\n", 2, 1);
}

TEST(Io, GraphMustBeSymmetric) {
    EXPECT_THROW(parse("graph 2\n0 1\n0 0\n"), Error);
    EXPECT_THROW(parse("graph 2\n1 0\n0 0\n"), Error);
}

TEST(Io, UniformRankRange) { EXPECT_THROW(parse("uniform 3 4\n"), Error); }

TEST(Io, Weights) {
    std::istringstream in("weights 2 3\n1 2 3\n4 5 6\n");
    WeightMatrix w = parse_weights(in);
    EXPECT_EQ(w.criteria(), 2);
    EXPECT_EQ(w.project({0, 2}), (Point{4, 10}));
    std::istringstream bad("weights 2 3\n1 2 3\n");
    EXPECT_THROW(parse_weights(bad), ParseError);
}

TEST(Io, SubsetParsing) {
    EXPECT_EQ(parse_subset("3,1,2", 4), (Subset{0, 1, 2}));
    EXPECT_THROW(parse_subset("0,1", 4), Error);
    EXPECT_THROW(parse_subset("1,1", 4), Error);
    EXPECT_THROW(parse_subset("5", 4), Error);
}

TEST(Io, Incidence) {
    std::istringstream in("vector 2 3\n1 1 0\n0 1 1\n");
    IntMatrix x = parse_incidence(in);
    EXPECT_EQ(x, (IntMatrix{{1, 1, 0}, {0, 1, 1}}));
    std::istringstream bad("vector 1 2\n1 2\n");
    EXPECT_THROW(parse_incidence(bad), Error);
}
