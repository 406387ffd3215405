#pragma once

#include "mtk/exec.hpp"
#include "mtk/matroid.hpp"
#include "mtk/polynomial.hpp"
#include "mtk/triangulation.hpp"

#include <vector>

namespace mtk {

// Apex e_B, one generator e_{B'} - e_B per adjacent basis B'.
Cone tangent_cone(const Matroid& m, const Basis& b);

struct HalfOpenCone {
    IntVec apex;
    std::vector<IntVec> generators;
    std::vector<bool> strict;  // true: the facet opposite generator j is excluded
};

struct HalfOpenDecomposition {
    std::vector<BigInt> y;  // in the projected coordinates of the triangulation
    std::vector<HalfOpenCone> cells;
};

// Picks y = K * (interior point of the first cell) + moment(xi), generic for all facet normals.
HalfOpenDecomposition half_open_decompose(const Cone& c, const ConeTriangulation& tri);
// Uses the given y; throws PreconditionError when some facet normal is orthogonal to it.
HalfOpenDecomposition half_open_decompose(const Cone& c, const ConeTriangulation& tri, const std::vector<BigInt>& y);

// Exact membership of an integer point in a half-open simplicial cone.
bool half_open_contains(const HalfOpenCone& c, const IntVec& x);
// gcd of the maximal minors is 1.
bool is_unimodular_cone(const std::vector<IntVec>& gens);

// z^a / prod_j (1 - z^{b_j}); v is the vertex used for dilations z^{a + (k-1) v}.
struct GenFunTerm {
    int sign = 1;
    IntVec a;
    IntVec v;
    std::vector<IntVec> b;
};

GenFunTerm genfun_of_halfopen(const HalfOpenCone& c);

// Terms for all vertex cones of P_M.
std::vector<GenFunTerm> brion_genfun(const Matroid& m, Exec exec = Exec::serial);

// c_0..c_m of the Todd recursion and b_n = c_n / (n! (n+1)!).
std::vector<BigInt> todd_c(int m);
std::vector<Rational> todd_b(int m);
// td_0..td_m at (xi_1..xi_s).
std::vector<Rational> todd_polynomials(const std::vector<Rational>& xi, int m);
Rational todd_eval(int m, const std::vector<Rational>& xi);

// First moment-curve point (1, xi, xi^2, ...) with nonzero products against every b.
std::vector<BigInt> generic_lambda(const std::vector<GenFunTerm>& terms);
std::vector<BigInt> moment_curve(long long xi, std::size_t n);

BigInt specialize_count(const std::vector<GenFunTerm>& terms, const std::vector<BigInt>& lambda,
                        Exec exec = Exec::serial);

// Coefficients of k^0..k^dim; coefficients above dim are checked to vanish.
Polynomial ehrhart_from_terms(const std::vector<GenFunTerm>& terms, const std::vector<BigInt>& lambda, int dim,
                              Exec exec = Exec::serial);

Polynomial ehrhart_polynomial(const Matroid& m, Exec exec = Exec::serial);

}  // namespace mtk
