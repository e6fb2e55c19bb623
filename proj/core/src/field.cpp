#include "germkit/field.hpp"

#include <algorithm>
#include <cctype>

namespace germkit {

const char* errc_name(Errc k) {
  switch (k) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NonInvertible: return "NonInvertible";
    case Errc::RingMismatch: return "RingMismatch";
    case Errc::IllegalSubstitution: return "IllegalSubstitution";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::TruncatedEvaluation: return "TruncatedEvaluation";
    case Errc::NotRegularError: return "NotRegularError";
    case Errc::TruncationBudgetExhausted: return "TruncationBudgetExhausted";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::AllVanish: return "AllVanish";
    case Errc::TooManyRoots: return "TooManyRoots";
    case Errc::TransversalityFailure: return "TransversalityFailure";
    case Errc::SeedTooShort: return "SeedTooShort";
    case Errc::DivisibilityFailure: return "DivisibilityFailure";
    case Errc::HenselStall: return "HenselStall";
    case Errc::OnDiscriminantLocus: return "OnDiscriminantLocus";
    case Errc::NotARoot: return "NotARoot";
    case Errc::PoleAtPoint: return "PoleAtPoint";
    case Errc::ParseError: return "ParseError";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

Rational rat_parse(const std::string& text) {
  if (text.empty()) fail(Errc::ParseError, "empty rational literal");
  std::size_t slash = text.find('/');
  auto check_digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) fail(Errc::ParseError, "bad rational literal '" + text + "'");
    std::size_t i = from;
    if (text[i] == '-' || text[i] == '+') ++i;
    if (i >= to) fail(Errc::ParseError, "bad rational literal '" + text + "'");
    for (; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(Errc::ParseError, "bad rational literal '" + text + "'");
  };
  check_digits(0, slash == std::string::npos ? text.size() : slash);
  if (slash != std::string::npos) check_digits(slash + 1, text.size());
  Rational q;
  if (q.set_str(text, 10) != 0)
    fail(Errc::ParseError, "bad rational literal '" + text + "'");
  if (rat_is_zero(Rational(q.get_den())))
    fail(Errc::DivisionByZero, "rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

namespace {

// Dense univariate polynomials over Q, low degree first, trailing zeros
// stripped. Local helpers for min_poly bookkeeping only.
using UPoly = std::vector<Rational>;

void strip(UPoly& p) {
  while (!p.empty() && rat_is_zero(p.back())) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  strip(d);
  return d;
}

// Remainder of a by b, b nonzero.
UPoly rem(UPoly a, const UPoly& b) {
  strip(a);
  while (deg(a) >= deg(b)) {
    Rational c = a.back() / b.back();
    int shift = deg(a) - deg(b);
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] -= c * b[i];
    strip(a);
    if (a.empty()) break;
  }
  return a;
}

UPoly monic(UPoly p) {
  strip(p);
  if (p.empty()) return p;
  Rational lc = p.back();
  for (auto& c : p) c /= lc;
  return p;
}

UPoly gcd(UPoly a, UPoly b) {
  strip(a);
  strip(b);
  while (!b.empty()) {
    UPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// g = s*a mod m with g = gcd(a, m); only the a-cofactor is needed.
std::pair<UPoly, UPoly> half_ext_gcd(UPoly a, UPoly m) {
  UPoly s0{Rational(1)}, s1;
  strip(a);
  strip(m);
  UPoly r0 = a, r1 = m;
  while (!r1.empty()) {
    // r0 = q*r1 + r
    UPoly q;
    UPoly r = r0;
    strip(r);
    q.assign(std::max<std::size_t>(r.size(), 1), Rational(0));
    while (deg(r) >= deg(r1)) {
      Rational c = r.back() / r1.back();
      int shift = deg(r) - deg(r1);
      q[shift] += c;
      for (std::size_t i = 0; i < r1.size(); ++i)
        r[i + shift] -= c * r1[i];
      strip(r);
      if (r.empty()) break;
    }
    strip(q);
    // s_new = s0 - q*s1
    UPoly qs(q.size() + s1.size(), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        qs[i + j] += q[i] * s1[j];
    UPoly s_new = s0;
    if (s_new.size() < qs.size()) s_new.resize(qs.size(), Rational(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s_new[i] -= qs[i];
    strip(s_new);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s_new);
  }
  return {r0, s0};
}

} // namespace

NumberField::NumberField() : generator_("v"), min_poly_{Rational(0), Rational(1)} {}

NumberField::NumberField(std::string generator, std::vector<Rational> min_poly)
    : generator_(std::move(generator)), min_poly_(std::move(min_poly)) {
  if (min_poly_.size() < 2)
    fail(Errc::ParseError, "min_poly must have degree >= 1");
  if (min_poly_.back() != Rational(1))
    fail(Errc::ParseError, "min_poly must be monic");
  if (generator_.empty()) fail(Errc::ParseError, "empty generator name");
  UPoly m = min_poly_;
  UPoly g = gcd(m, derivative(m));
  if (deg(g) != 0)
    fail(Errc::ParseError, "min_poly must be squarefree (gcd with derivative is nonconstant)");
}

FieldElement NumberField::zero() const {
  return FieldElement{std::vector<Rational>(degree(), Rational(0))};
}

FieldElement NumberField::one() const { return from_rational(Rational(1)); }

FieldElement NumberField::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = q;
  return FieldElement{std::move(c)};
}

FieldElement NumberField::gen() const {
  if (degree() == 1) return from_rational(-min_poly_[0]);
  std::vector<Rational> c(degree(), Rational(0));
  c[1] = 1;
  return FieldElement{std::move(c)};
}

void NumberField::check_element(const FieldElement& a) const {
  if (static_cast<int>(a.coords.size()) != degree())
    fail(Errc::RingMismatch, "field element has wrong coordinate count");
}

bool NumberField::is_zero(const FieldElement& a) const {
  check_element(a);
  return std::all_of(a.coords.begin(), a.coords.end(), rat_is_zero);
}

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  FieldElement r = a;
  for (int i = 0; i < degree(); ++i) r.coords[i] += b.coords[i];
  return r;
}

FieldElement NumberField::sub(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  FieldElement r = a;
  for (int i = 0; i < degree(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

FieldElement NumberField::neg(const FieldElement& a) const {
  check_element(a);
  FieldElement r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> poly) const {
  const int d = degree();
  while (static_cast<int>(poly.size()) > d) {
    Rational lc = poly.back();
    int k = static_cast<int>(poly.size()) - 1 - d;
    if (!rat_is_zero(lc)) {
      for (int i = 0; i < d; ++i)
        poly[k + i] -= lc * min_poly_[i];
    }
    poly.pop_back();
  }
  poly.resize(d, Rational(0));
  return poly;
}

FieldElement NumberField::mul(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  const int d = degree();
  std::vector<Rational> prod(2 * d - 1, Rational(0));
  for (int i = 0; i < d; ++i) {
    if (rat_is_zero(a.coords[i])) continue;
    for (int j = 0; j < d; ++j)
      prod[i + j] += a.coords[i] * b.coords[j];
  }
  return FieldElement{reduce(std::move(prod))};
}

FieldElement NumberField::mul_rat(const FieldElement& a, const Rational& q) const {
  check_element(a);
  FieldElement r = a;
  for (auto& c : r.coords) c *= q;
  return r;
}

FieldElement NumberField::inv(const FieldElement& a) const {
  check_element(a);
  if (is_zero(a)) fail(Errc::DivisionByZero, "inverse of zero field element");
  UPoly lift = a.coords;
  strip(lift);
  auto [g, s] = half_ext_gcd(lift, min_poly_);
  if (deg(g) != 0)
    fail(Errc::NonInvertible,
         "lift of element shares a nonconstant factor with the minimal polynomial");
  Rational c = g[0];
  UPoly r = reduce(std::move(s));
  for (auto& x : r) x /= c;
  return FieldElement{std::move(r)};
}

FieldElement NumberField::div(const FieldElement& a, const FieldElement& b) const {
  return mul(a, inv(b));
}

FieldElement NumberField::pow(const FieldElement& a, unsigned long e) const {
  FieldElement r = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return r;
}

FieldElement NumberField::eval_min_poly(const FieldElement& e) const {
  FieldElement acc = zero();
  for (int i = deg(min_poly_); i >= 0; --i) {
    acc = mul(acc, e);
    acc = add(acc, from_rational(min_poly_[i]));
  }
  return acc;
}

std::optional<std::vector<FieldElement>> NumberField::conjugates() const {
  if (degree() == 1) return std::vector<FieldElement>{gen()};
  if (degree() == 2) {
    // m = v^2 + a1 v + a0 factors over K as (X - v)(X + a1 + v).
    FieldElement first = gen();
    FieldElement second = neg(add(first, from_rational(min_poly_[1])));
    return std::vector<FieldElement>{first, second};
  }
  return std::nullopt;
}

std::optional<Rational> NumberField::as_rational(const FieldElement& a) const {
  check_element(a);
  for (std::size_t i = 1; i < a.coords.size(); ++i)
    if (!rat_is_zero(a.coords[i])) return std::nullopt;
  return a.coords[0];
}

bool NumberField::operator==(const NumberField& other) const {
  return generator_ == other.generator_ && min_poly_ == other.min_poly_;
}

FieldElement field_arith(FieldOp op, const FieldElement& x,
                         const FieldElement& y, const NumberField& F) {
  switch (op) {
    case FieldOp::Add: return F.add(x, y);
    case FieldOp::Sub: return F.sub(x, y);
    case FieldOp::Mul: return F.mul(x, y);
    case FieldOp::Div: return F.div(x, y);
  }
  fail(Errc::Internal, "bad FieldOp");
}

} // namespace germkit
