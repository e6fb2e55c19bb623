#pragma once

#include "germkit/polygcd.hpp"

namespace germkit {

// Quotient of exact polynomials in canonical form: gcd reduced, denominator
// leading coefficient 1, zero represented as 0/1. Canonical form makes
// equality plain component comparison.
class RationalFunction {
public:
  RationalFunction() = default;
  explicit RationalFunction(const Series& num);
  RationalFunction(const Series& num, const Series& den);

  const Series& num() const { return num_; }
  const Series& den() const { return den_; }
  const Ring& ring() const { return num_.ring(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& g) const;
  RationalFunction operator-(const RationalFunction& g) const;
  RationalFunction operator*(const RationalFunction& g) const;
  RationalFunction operator/(const RationalFunction& g) const;

  bool operator==(const RationalFunction& g) const;

private:
  void reduce();

  Series num_;
  Series den_;
};

} // namespace germkit
