#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hypersect {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a", "-a" or "a/b"; throws std::invalid_argument on bad input or b = 0.
Rational parse_rational(std::string_view text);

/// "a" when the denominator is 1, otherwise "a/b".
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

Integer ipow(const Integer& base, unsigned long e);
Rational rpow(const Rational& base, unsigned long e);

/// Returns v as a signed 64-bit value; throws std::overflow_error if it does not fit.
std::int64_t to_int64(const Integer& v);

}  // namespace hypersect
