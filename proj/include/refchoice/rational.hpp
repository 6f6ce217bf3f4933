#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace refchoice {

/// Exact rational number. All probabilities and every derived quantity
/// (odds, Mobius sums, weights) are carried in this type.
using Rational = mpq_class;

/// Parses "p/q" or "p" (optionally signed numerator). The result is
/// canonicalized, so "2/4" and "1/2" compare equal. Throws ParseError on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical reduced form: "p/q", or "p" when the denominator is one.
std::string format_rational(const Rational& value);

inline bool is_probability(const Rational& value) { return sgn(value) >= 0 && value <= 1; }

}  // namespace refchoice
