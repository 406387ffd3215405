#include "mtk/polynomial.hpp"

#include "mtk/errors.hpp"

#include <algorithm>

namespace mtk {

int Polynomial::degree() const {
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void Polynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::vector<std::string> Polynomial::to_strings() const {
    std::vector<std::string> out;
    for (const auto& c : coeffs) out.push_back(to_string(c));
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) r.coeffs[i] += a.coeffs[i];
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    r.trim();
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    if (a.coeffs.empty() || b.coeffs.empty()) return r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    r.trim();
    return r;
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    Polynomial r = a;
    for (auto& x : r.coeffs) x *= c;
    r.trim();
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    Polynomial x = a, y = b;
    x.trim();
    y.trim();
    return x.coeffs == y.coeffs;
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    if (ys.size() != n) throw DimensionError("interpolation needs as many values as nodes");
    if (n == 0) return {};
    std::vector<Rational> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational dx = xs[i] - xs[i - level];
            if (dx == 0) throw PreconditionError("interpolation nodes must be distinct");
            dd[i] = (dd[i] - dd[i - 1]) / dx;
        }
    Polynomial p;
    p.coeffs = {dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        Polynomial factor;
        factor.coeffs = {-xs[i], Rational(1)};
        p = p * factor;
        p = p + Polynomial{{dd[i]}};
    }
    p.trim();
    return p;
}

}  // namespace mtk
