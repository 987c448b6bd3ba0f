#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

#include "meandiv/errors.hpp"

namespace meandiv {

using BigInt = boost::multiprecision::mpz_int;

// Exact rational with positive denominator, kept in lowest terms by the
// backend after every operation. Equality is structural equality of the
// canonical form.
using Rat = boost::multiprecision::mpq_rational;

/// Floor division a/b rounding toward -infinity. Requires b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

/// floor(x) as an integer (toward -infinity, not truncation).
BigInt rat_floor(const Rat& x);

/// ceil(x) as an integer.
BigInt rat_ceil(const Rat& x);

/// Fractional part x - floor(x), always in [0, 1).
Rat rat_frac(const Rat& x);

/// Canonical "num/den" rendering, e.g. "1/60", "0/1", "-3/4".
std::string rat_str(const Rat& x);

/// Convenience double approximation for display columns.
double rat_approx(const Rat& x);

/// a * b with overflow detection; throws Error on overflow.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// lcm on int64 with overflow detection.
std::int64_t checked_lcm(std::int64_t a, std::int64_t b);

}  // namespace meandiv
