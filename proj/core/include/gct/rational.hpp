#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace gct {

// Exact rational scalar.  All grading arithmetic, generator entries and
// law checks run on this type; doubles appear only in kernel numerics.
using Rational = mpq_class;

// Canonical fraction; gmp constructors do not reduce on their own.
Rational rat(long num, long den = 1);

double to_double(const Rational& q);

// Accepts integers ("3"), fractions ("3/2", denominator > 0) and plain
// decimals ("1.5", "0.25").  Anything else yields nullopt.
std::optional<Rational> parse_rational(const std::string& text);

// Canonical text: "n" for integers, "n/d" otherwise.
std::string format_rational(const Rational& q);

// Shortest round-trip-friendly decimal at the given significance; all CLI
// numeric output goes through this with the default of 12 digits.
std::string format_double(double v, int significant = 12);

}  // namespace gct
