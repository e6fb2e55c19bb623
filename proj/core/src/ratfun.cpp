#include "germkit/ratfun.hpp"

namespace germkit {

RationalFunction::RationalFunction(const Series& num)
    : num_(num), den_(Series::constant(num.ring(), num.ring().field().one())) {
  if (!num.is_exact()) fail(Errc::Internal, "rational function from truncated series");
}

RationalFunction::RationalFunction(const Series& num, const Series& den)
    : num_(num), den_(den) {
  if (!num.is_exact() || !den.is_exact())
    fail(Errc::Internal, "rational function from truncated series");
  if (!(num.ring() == den.ring()))
    fail(Errc::RingMismatch, "numerator and denominator from different rings");
  if (den.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  const Ring& R = num_.ring();
  const NumberField& F = R.field();
  if (num_.is_zero()) {
    den_ = Series::constant(R, F.one());
    return;
  }
  Series g = poly_gcd(num_, den_);
  bool g_trivial = g.terms().size() == 1 &&
                   total_degree(g.terms().begin()->first) == 0;
  if (!g_trivial) {
    auto qn = exact_divide(num_, g);
    auto qd = exact_divide(den_, g);
    if (!qn || !qd) fail(Errc::Internal, "gcd does not divide its arguments");
    num_ = std::move(*qn);
    den_ = std::move(*qd);
  }
  const FieldElement& lead = den_.terms().rbegin()->second;
  if (!(lead == F.one())) {
    FieldElement inv = F.inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool RationalFunction::is_polynomial() const {
  return den_.terms().size() == 1 && total_degree(den_.terms().begin()->first) == 0;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& g) const {
  return RationalFunction(num_ * g.den_ + g.num_ * den_, den_ * g.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& g) const {
  return RationalFunction(num_ * g.den_ - g.num_ * den_, den_ * g.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& g) const {
  return RationalFunction(num_ * g.num_, den_ * g.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& g) const {
  if (g.is_zero()) fail(Errc::DivisionByZero, "division by the zero rational function");
  return RationalFunction(num_ * g.den_, den_ * g.num_);
}

bool RationalFunction::operator==(const RationalFunction& g) const {
  return num_ == g.num_ && den_ == g.den_;
}

} // namespace germkit
