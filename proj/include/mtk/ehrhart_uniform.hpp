#pragma once

#include "mtk/oracles.hpp"
#include "mtk/polynomial.hpp"
#include "mtk/rational.hpp"

#include <vector>

namespace mtk {

// Coefficients of (1 + T + ... + T^{r-1})^n, length n(r-1)+1.
std::vector<BigInt> katzman(int n, int r);
// Same coefficients from the multinomial sum; independent route for tests.
std::vector<BigInt> katzman_multinomial(int n, int r);

// h*-vector of the hypersimplex P(U^{r,n}), 1 <= r <= n-1; trailing zeros trimmed.
std::vector<BigInt> hstar_uniform(int n, int r);
// Ehrhart polynomial in k, degree n-1.
Polynomial ehrhart_uniform(int n, int r);

// Weakly rises then weakly falls.
bool is_unimodal(const std::vector<BigInt>& v);

// Numerator of sum_k i(k) t^k times (1-t)^{dim+1}; trailing zeros trimmed.
std::vector<BigInt> hstar_from_counts(const LatticeCountTable& table, int dim);
std::vector<BigInt> hstar_from_polynomial(const Polynomial& ehrhart, int dim);

}  // namespace mtk
