#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace hsm {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Every moment, coefficient and intermediate value in this
/// library is one of these; no floating point is used anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// n! as an exact integer. Requires n >= 0.
BigInt factorial(std::int64_t n);

/// Binomial coefficient C(n, k); 0 when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// base^exp for exp >= 0, with the convention 0^0 = 1.
BigInt ipow(const BigInt& base, std::int64_t exp);

/// base^exp for any integer exp; negative exponents require base != 0.
/// 0^0 = 1.
Rational rpow(const Rational& base, std::int64_t exp);

/// Renders "p" for integers and "p/q" otherwise (q > 0, sign on p).
std::string to_decimal_string(const Rational& value);
std::string to_decimal_string(const BigInt& value);

}  // namespace hsm
