#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace waring {

/// Exact scalar type. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" with decimal digits only. Throws
/// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Integer factorial(unsigned n);

/// d! / (k_0! k_1! ... k_n!) for k summing to d.
template <class Range>
Integer multinomial(const Range& parts) {
    unsigned total = 0;
    for (auto k : parts) total += static_cast<unsigned>(k);
    Integer result = factorial(total);
    for (auto k : parts) result /= factorial(static_cast<unsigned>(k));
    return result;
}

Rational pow(const Rational& base, unsigned exponent);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace waring
