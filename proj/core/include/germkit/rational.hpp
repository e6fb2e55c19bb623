#pragma once

#include <gmpxx.h>

#include <string>

#include "germkit/errors.hpp"

namespace germkit {

// Arbitrary-precision rational, always kept in canonical form.
// Thin layer over GMP's mpq_class; no floating point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) fail(Errc::DivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p" or "p/q" (arbitrary precision decimal digits).
Rational rat_parse(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rational& q);

inline bool rat_is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace germkit
