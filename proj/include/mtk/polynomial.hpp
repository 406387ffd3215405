#pragma once

#include "mtk/rational.hpp"

#include <string>
#include <vector>

namespace mtk {

// Univariate polynomial, coefficients in ascending degree.
struct Polynomial {
    std::vector<Rational> coeffs;

    int degree() const;  // -1 for the zero polynomial
    Rational operator()(const Rational& x) const;
    void trim();
    std::vector<std::string> to_strings() const;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& a);
bool operator==(const Polynomial& a, const Polynomial& b);

// Newton interpolation through (xs[i], ys[i]); xs distinct.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace mtk
