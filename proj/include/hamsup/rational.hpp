#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hamsup {

// Exact rational scalar. GMP keeps results of arithmetic in lowest terms with
// a positive denominator; values built from a num/den pair go through
// make_rational so the same holds for them.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "a" or "a/b" with optional sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "a" when the denominator is 1, "a/b" otherwise.
std::string to_string(const Rational& value);

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }

}  // namespace hamsup
