#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mtk {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Accepts "p/q", "p" and an optional sign. Throws ParseError.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

// "p/q" with q > 1, or "p" for integers.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

bool is_integer(const Rational& q);
BigInt numerator_of(const Rational& q);
BigInt denominator_of(const Rational& q);

// C(n, k) with C = 0 when k < 0, k > n or n < 0.
BigInt binomial(long long n, long long k);
BigInt factorial(unsigned n);
Rational power(const Rational& base, unsigned exponent);
BigInt power(const BigInt& base, unsigned exponent);

// Cap overrides read from the environment, e.g. MTK_BASIS_CAP.
std::uint64_t env_cap(const char* name, std::uint64_t fallback);

}  // namespace mtk
