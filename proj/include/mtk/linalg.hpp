#pragma once

#include "mtk/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mtk {

using IntVec = std::vector<long long>;
using IntMatrix = std::vector<IntVec>;
using BigMatrix = std::vector<std::vector<BigInt>>;
using QMatrix = std::vector<std::vector<Rational>>;

// Bareiss fraction-free elimination; m must be square.
BigInt determinant(BigMatrix m);
BigInt determinant(const IntMatrix& m);

// Rank over the rationals. Rows may have any common length.
std::size_t rank(const IntMatrix& m);
std::size_t rank(const BigMatrix& m);
std::size_t rank(QMatrix m);

// Unique solution of a square system, or nullopt when singular.
std::optional<std::vector<Rational>> solve(QMatrix a, std::vector<Rational> b);

// adj(m) with adj(m) * m = det(m) * I. Requires det(m) != 0.
BigMatrix adjugate(const IntMatrix& m, BigInt* det_out = nullptr);

IntMatrix transpose(const IntMatrix& m);
long long dot(const IntVec& a, const IntVec& b);

}  // namespace mtk
