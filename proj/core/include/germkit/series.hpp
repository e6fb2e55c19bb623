#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "germkit/field.hpp"

namespace germkit {

// Ambient ring: an ordered variable list over a NumberField. Cheap handle,
// compared by content so independently built rings interoperate.
class Ring {
public:
  Ring() : Ring({}, NumberField()) {}
  Ring(std::vector<std::string> vars, NumberField field);

  int nvars() const { return static_cast<int>(data_->vars.size()); }
  const std::vector<std::string>& vars() const { return data_->vars; }
  const std::string& var_name(int i) const { return data_->vars.at(i); }
  const NumberField& field() const { return data_->field; }
  std::optional<int> var_index(const std::string& name) const;

  bool operator==(const Ring& other) const;

private:
  struct Data {
    std::vector<std::string> vars;
    NumberField field;
  };
  std::shared_ptr<const Data> data_;
};

// One exponent per ring variable, fixed order.
using ExpVec = std::vector<int>;

int total_degree(const ExpVec& e);

// Graded lexicographic: by total degree, then lexicographic on exponents.
// The single term order used everywhere, so serialized output is canonical.
struct GradedLexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Truncation state of a value: a genuine polynomial (exact) or certified
// only through total degree D. D = -1 means no certified information.
class Trunc {
public:
  static Trunc exact() { return Trunc(kExact); }
  static Trunc at(int D) { return Trunc(D); }

  bool is_exact() const { return d_ == kExact; }
  int degree() const;
  // Effective bound: exact behaves as +infinity.
  static Trunc min(const Trunc& a, const Trunc& b);
  bool allows_degree(int deg) const { return is_exact() || deg <= d_; }

  bool operator==(const Trunc&) const = default;

private:
  static constexpr int kExact = -2;
  explicit Trunc(int d) : d_(d) {}
  int d_;
};

// ord(f) for a sparse truncated series: a witnessed finite order, a lower
// bound at_least(D+1) when nothing is stored below the truncation, or
// infinite for the exact zero polynomial.
struct Order {
  enum class Kind { Finite, AtLeast, Infinite };
  Kind kind;
  int value = 0; // Finite: the order; AtLeast: the bound

  bool is_finite() const { return kind == Kind::Finite; }
  static Order finite(int v) { return {Kind::Finite, v}; }
  static Order at_least(int v) { return {Kind::AtLeast, v}; }
  static Order infinite() { return {Kind::Infinite, 0}; }
  bool operator==(const Order&) const = default;
};

// Full evaluation point: one field element per ring variable.
struct Point {
  std::vector<FieldElement> coords;
};

// Sparse multivariate polynomial / truncated power series over a NumberField.
// Canonical form: no zero coefficients, no stored term above the truncation
// degree; equal values have identical term maps.
class Series {
public:
  using TermMap = std::map<ExpVec, FieldElement, GradedLexLess>;

  Series() : Series(Ring()) {}
  explicit Series(Ring ring, Trunc trunc = Trunc::exact());

  static Series constant(const Ring& ring, const FieldElement& c,
                         Trunc trunc = Trunc::exact());
  static Series constant(const Ring& ring, const Rational& c,
                         Trunc trunc = Trunc::exact());
  static Series monomial(const Ring& ring, const ExpVec& e, const FieldElement& c,
                         Trunc trunc = Trunc::exact());
  static Series variable(const Ring& ring, int var);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  Trunc trunc() const { return trunc_; }

  // True when no terms are stored. For a truncated value this only means
  // "zero mod trunc"; genuine vanishing needs an exact value.
  bool is_zero() const { return terms_.empty(); }
  bool is_exact() const { return trunc_.is_exact(); }

  FieldElement coeff(const ExpVec& e) const;
  FieldElement constant_term() const;
  bool occurs(int var) const;
  int degree_in(int var) const; // max exponent of var, -1 when absent

  // Accumulate c * x^e, keeping canonical form.
  void add_term(const ExpVec& e, const FieldElement& c);

  // Same terms re-certified at `t` (terms above a finite t are dropped).
  // Tightening only: marking a truncated value exact is refused.
  Series with_trunc(Trunc t) const;

  Series operator-() const;
  Series operator+(const Series& g) const;
  Series operator-(const Series& g) const;
  Series operator*(const Series& g) const;
  Series scaled(const FieldElement& c) const;
  Series pow(int e) const;

  bool operator==(const Series& g) const;

private:
  void normalize();

  Ring ring_;
  Trunc trunc_;
  TermMap terms_;
};

enum class SeriesOp { Add, Mul };

// Contract-shaped entry point over + and *.
Series series_arith(SeriesOp op, const Series& f, const Series& g);

Order ord(const Series& f);

// Substitutes subst[v] for variable v (unlisted variables stay themselves).
// An exact polynomial accepts any substitution; a truncated series only
// accepts images with zero constant term. The result is certified through
// the largest degree all contributing terms determine.
Series compose(const Series& f, const std::map<int, Series>& subst);

Series derivative(const Series& f, int var);

// Full evaluation; truncated input is only meaningful at the origin.
FieldElement evaluate(const Series& f, const Point& p);

// f(M x): each variable x_i is replaced by sum_j M[i][j] x_j.
// M must be invertible over Q. Degree-preserving, truncation unchanged.
Series linear_change(const Series& f, const std::vector<std::vector<long>>& M);

// Multiplicative inverse of a unit (f(0) != 0) through total degree D.
// A nonzero constant inverts exactly.
Series inverse_unit(const Series& f, int D);

// --- structural helpers used by the preparation/tower/extraction layers ---

// Coefficient of var^k as a series with the var-exponent removed.
Series coeff_of_var_power(const Series& f, int var, int k);
// Largest q with var^q dividing f (0 for f = 0).
int max_var_power_dividing(const Series& f, int var);
Series divide_by_var_power(const Series& f, int var, int q);
Series mul_by_var_power(const Series& f, int var, int q);
// Drop every term with exponent of var above maxdeg (adic bookkeeping in
// one variable; the total-degree truncation mark is left untouched).
Series truncate_var_degree(const Series& f, int var, int maxdeg);
// Restriction f(0, ..., 0, x_var, 0, ..., 0).
Series restrict_to_axis(const Series& f, int var);

// Transfers f into `target`, mapping variable i of f to var_map[i] of the
// target ring; var_map[i] = -1 requires that variable to be absent from f.
Series map_to_ring(const Series& f, const Ring& target, const std::vector<int>& var_map);

// Term-exact agreement on all terms of total degree <= D.
bool agree_up_to(const Series& f, const Series& g, int D);
// Largest degree through which f and g agree (capped at `cap`), or -1 if
// they already differ in the constant term.
int agreement_degree(const Series& f, const Series& g, int cap);

std::string to_string(const Series& f); // human-readable, for diagnostics

} // namespace germkit
