// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gqm {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonicalized by the helpers below

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p/q", "-p/q" and plain integers. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

double to_double(const Rational& q);

/// Least common multiple of the denominators; 1 for an empty range.
template <class Range>
Integer common_denominator(const Range& values) {
  Integer l = 1;
  for (const Rational& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

}  // namespace gqm
