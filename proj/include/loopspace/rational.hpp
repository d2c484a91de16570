#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace loopspace {

/// Exact rational number backed by GMP; always kept in canonical form.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, and comparisons assume reduced operands.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Lowest-terms "p/q" string. Integers are written with an explicit "/1".
std::string to_fraction_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace loopspace
