#include "mtk/rational.hpp"

#include "mtk/errors.hpp"

#include <cctype>
#include <cstdlib>

namespace mtk {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : Error(line ? what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"
                 : what),
      line_(line),
      column_(column) {}

namespace {

bool valid_integer_text(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
    if (!valid_integer_text(text)) throw ParseError("not an integer: '" + std::string(text) + "'");
    std::string s(text);
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s);
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!den.empty() && (den[0] == '-' || den[0] == '+'))
        throw ParseError("signed denominator: '" + std::string(text) + "'");
    BigInt p = parse_bigint(num);
    BigInt q = parse_bigint(den);
    if (q == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rational(p, q);
}

std::string to_string(const Rational& q) {
    if (denominator_of(q) == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

std::string to_string(const BigInt& z) { return z.str(); }

BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }
bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

BigInt binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Rational power(const Rational& base, unsigned exponent) {
    Rational r = 1;
    Rational b = base;
    while (exponent) {
        if (exponent & 1u) r *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return r;
}

BigInt power(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    unsigned long long x = std::strtoull(v, &end, 10);
    if (!end || *end != '\0') return fallback;
    return x;
}

}  // namespace mtk
