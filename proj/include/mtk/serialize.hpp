#pragma once

#include "mtk/genfun.hpp"
#include "mtk/matroid.hpp"
#include "mtk/multicriteria.hpp"
#include "mtk/oracles.hpp"
#include "mtk/polynomial.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace mtk {

using Json = nlohmann::ordered_json;

// Rationals travel as "p/q" strings, bases as 1-based index arrays.
Json to_json(const Rational& q);
Json to_json(const std::vector<BigInt>& v);
Json basis_json(const Basis& b);
Json point_json(const Point& p);
Json to_json(const Polynomial& p);
Json to_json(const GenFunTerm& t);

Rational rational_from_json(const Json& j);
Basis basis_from_json(const Json& j, int n);
Point point_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
GenFunTerm term_from_json(const Json& j);
std::vector<BigInt> bigints_from_json(const Json& j);

// Two-space indented, trailing newline.
std::string dump(const Json& j);

// "k,count" header then one row per k.
std::string counts_csv(const LatticeCountTable& t);
// One "x y [z ...]" line per point.
std::string points_text(const std::vector<Point>& pts);

}  // namespace mtk
