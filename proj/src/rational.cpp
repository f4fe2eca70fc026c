#include "hsm/rational.hpp"

#include <stdexcept>

namespace hsm {

BigInt factorial(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    BigInt result = 1;
    for (std::int64_t i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return result;
}

BigInt ipow(const BigInt& base, std::int64_t exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    BigInt result = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        exp >>= 1;
        if (exp > 0) b *= b;
    }
    return result;
}

Rational rpow(const Rational& base, std::int64_t exp) {
    if (exp >= 0) {
        Rational result = 1;
        Rational b = base;
        while (exp > 0) {
            if (exp & 1) result *= b;
            exp >>= 1;
            if (exp > 0) b *= b;
        }
        return result;
    }
    if (base == 0) throw std::domain_error("rpow: zero base with negative exponent");
    return 1 / rpow(base, -exp);
}

std::string to_decimal_string(const Rational& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_decimal_string(const BigInt& value) { return value.str(); }

}  // namespace hsm
