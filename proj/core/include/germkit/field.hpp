#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germkit/rational.hpp"

namespace germkit {

// Element of K = Q[v]/(m(v)) in the power basis 1, v, ..., v^{d-1}.
// coords.size() always equals the degree of the defining field.
struct FieldElement {
  std::vector<Rational> coords;

  bool operator==(const FieldElement&) const = default;
};

// Exact arithmetic over Q and simple extensions K = Q[v]/(m(v)).
// Plain Q is the d = 1 case, so everything downstream is field-generic.
// m must be monic and squarefree; it need not be irreducible, but then
// division can hit a zero divisor and reports NonInvertible.
class NumberField {
public:
  // Plain Q: generator "v" with minimal polynomial v.
  NumberField();
  // min_poly holds c_0..c_d with c_d = 1 (monic), d >= 1.
  NumberField(std::string generator, std::vector<Rational> min_poly);

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  bool is_rational() const { return degree() == 1; }
  const std::string& generator() const { return generator_; }
  const std::vector<Rational>& min_poly() const { return min_poly_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  // The class of v itself (for d = 1 this is the rational root of m).
  FieldElement gen() const;

  bool is_zero(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul_rat(const FieldElement& a, const Rational& q) const;
  // Unique z with b*z = a. DivisionByZero when b = 0; NonInvertible when the
  // lift of b shares a factor with m (m reducible on the relevant branch).
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement pow(const FieldElement& a, unsigned long e) const;

  // m evaluated at e, reduced in K. Zero exactly when e is a root of m.
  FieldElement eval_min_poly(const FieldElement& e) const;

  // All d roots of m inside K itself, first entry the class of v, or
  // nullopt (Unsupported) when root-finding over K is out of reach (d > 2).
  std::optional<std::vector<FieldElement>> conjugates() const;

  // If a is a rational constant (coords 1..d-1 zero), returns it.
  std::optional<Rational> as_rational(const FieldElement& a) const;

  bool operator==(const NumberField& other) const;

private:
  void check_element(const FieldElement& a) const;
  std::vector<Rational> reduce(std::vector<Rational> poly) const;

  std::string generator_;
  std::vector<Rational> min_poly_;
};

enum class FieldOp { Add, Sub, Mul, Div };

// Contract-shaped entry point over the four arithmetic methods.
FieldElement field_arith(FieldOp op, const FieldElement& x,
                         const FieldElement& y, const NumberField& F);

} // namespace germkit
