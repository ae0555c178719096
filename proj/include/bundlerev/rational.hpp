#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace bundlerev {

// Exact arithmetic for values, probabilities and prices.
using Rational = mpq_class;

/// Parses "p/q", an integer, or a decimal literal ("6.293", "1e-3" is not
/// accepted) into an exact rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

struct DecimalText {
  std::string text;
  bool exact = true;  // false when the expansion was truncated
};

/// Decimal expansion truncated at `places` fractional digits. Inexact
/// renderings carry a trailing "...".
DecimalText to_decimal(const Rational& q, int places = 12);

/// "p/q (d.ddd)" as printed by the command line tools.
std::string to_display(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

/// num/den in canonical form (mpq_class(num, den) alone is not reduced).
inline Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational from_int(std::int64_t v) { return Rational(mpz_class(static_cast<long>(v))); }

/// Exact conversion of a finite binary64 value.
Rational from_double(double v);

}  // namespace bundlerev
