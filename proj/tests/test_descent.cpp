#include <doctest.h>

#include "germkit/descent.hpp"
#include "germkit/expr.hpp"
#include "helpers.hpp"

using namespace germkit;
using germkit::testing::expr;

namespace {
NumberField sqrt2() { return NumberField("v", {rat(-2), rat(0), rat(1)}); }
}

TEST_CASE("basis_decompose splits power-basis coordinates") {
  NumberField K = sqrt2();
  Ring R({"x"}, K);
  // f = sum_{k<=3} (sqrt2 + k) x^k
  Series f(R);
  for (int k = 0; k <= 3; ++k) {
    FieldElement c = K.add(K.gen(), K.from_rational(rat(k)));
    f.add_term(ExpVec{k}, c);
  }
  DescentResult res = basis_decompose(f);
  REQUIRE(res.components.size() == 2);
  CHECK(res.components[0] == expr("x + 2*x^2 + 3*x^3", res.rational_ring));
  CHECK(res.components[1] == expr("1 + x + x^2 + x^3", res.rational_ring));
  CHECK(descent_reassemble(res, R) == f);

  auto ok = vandermonde_verify(res, f);
  REQUIRE(ok.has_value());
  CHECK(*ok);
}

TEST_CASE("decomposition over plain Q is the identity") {
  Ring R({"x1", "x2"}, NumberField());
  Series f = expr("x1^2 - 1/2*x2", R);
  DescentResult res = basis_decompose(f);
  REQUIRE(res.components.size() == 1);
  CHECK(res.components[0] == f);
  auto ok = vandermonde_verify(res, f);
  REQUIRE(ok.has_value());
  CHECK(*ok); // 1x1 Vandermonde
}

TEST_CASE("v times a variable splits into [0, x1]") {
  NumberField K = sqrt2();
  Ring R({"x1"}, K);
  Series f = Series::monomial(R, ExpVec{1}, K.gen());
  DescentResult res = basis_decompose(f);
  CHECK(res.components[0].is_zero());
  CHECK(res.components[1] == expr("x1", res.rational_ring));
}

TEST_CASE("vandermonde_verify is Unsupported for cubic fields") {
  NumberField K("v", {rat(-2), rat(0), rat(0), rat(1)}); // v^3 - 2
  Ring R({"x"}, K);
  Series f = Series::constant(R, K.gen());
  DescentResult res = basis_decompose(f);
  CHECK(!vandermonde_verify(res, f).has_value());
}

TEST_CASE("corrupted component fails the Vandermonde check") {
  NumberField K = sqrt2();
  Ring R({"x"}, K);
  Series f(R);
  for (int k = 0; k <= 2; ++k)
    f.add_term(ExpVec{k}, K.add(K.gen(), K.from_rational(rat(2 * k + 1))));
  DescentResult res = basis_decompose(f);
  res.components[1] =
      res.components[1] + expr("x^2", res.rational_ring); // tamper
  auto ok = vandermonde_verify(res, f);
  REQUIRE(ok.has_value());
  CHECK(!*ok);
}

TEST_CASE("branch_taylor of the square root") {
  Ring R({"t", "v"}, NumberField());
  NumberField Q;
  BranchPoint bp{R, 1, expr("v^2 - t", R), {rat(1)}, Q, Q.from_rational(rat(1)), 3};
  Series w = branch_taylor(bp);
  // 1 + s/2 - s^2/8 + s^3/16
  CHECK(w.coeff(ExpVec{0}) == Q.from_rational(rat(1)));
  CHECK(w.coeff(ExpVec{1}) == Q.from_rational(rat(1, 2)));
  CHECK(w.coeff(ExpVec{2}) == Q.from_rational(rat(-1, 8)));
  CHECK(w.coeff(ExpVec{3}) == Q.from_rational(rat(1, 16)));

  BranchPoint bn = bp;
  bn.v0 = Q.from_rational(rat(-1));
  Series wn = branch_taylor(bn);
  CHECK(wn == -w);
}

TEST_CASE("branch_taylor of a polynomial branch") {
  Ring R({"t", "v"}, NumberField());
  NumberField Q;
  BranchPoint bp{R, 1, expr("v - t^2", R), {rat(3)}, Q, Q.from_rational(rat(9)), 5};
  Series w = branch_taylor(bp);
  CHECK(w.coeff(ExpVec{0}) == Q.from_rational(rat(9)));
  CHECK(w.coeff(ExpVec{1}) == Q.from_rational(rat(6)));
  CHECK(w.coeff(ExpVec{2}) == Q.from_rational(rat(1)));
  CHECK(w.coeff(ExpVec{3}) == Q.zero());
}

TEST_CASE("branch_taylor guards") {
  Ring R({"t", "v"}, NumberField());
  NumberField Q;
  BranchPoint on_disc{R, 1, expr("v^2 - t", R), {rat(0)}, Q, Q.zero(), 3};
  try {
    branch_taylor(on_disc);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::OnDiscriminantLocus);
  }
  BranchPoint not_root{R, 1, expr("v^2 - t", R), {rat(1)}, Q,
                       Q.from_rational(rat(2)), 3};
  try {
    branch_taylor(not_root);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::NotARoot);
  }
}

TEST_CASE("branch_taylor with an algebraic root stays in its field") {
  Ring R({"t", "v"}, NumberField());
  NumberField K = sqrt2();
  BranchPoint bp{R, 1, expr("v^2 - 2*t", R), {rat(1)}, K, K.gen(), 8};
  Series w = branch_taylor(bp);
  CHECK(w.ring().field() == K);
  CHECK(w.coeff(ExpVec{0}) == K.gen());
  // residual certified by construction; spot-check P(q+s, w) = 0 mod s^9
  Ring RK({"t", "root"}, K);
  Series PK = lift_to_field(expr("v^2 - 2*t", R), RK);
  Series shifted = compose(PK, {{0, Series::constant(RK, K.one()) + Series::variable(RK, 0)}});
  std::vector<int> vmap{0, -1};
  Series wR(RK, w.trunc());
  for (const auto& [e, c] : w.terms()) wR.add_term(ExpVec{e[0], 0}, c);
  CHECK(compose(shifted, {{1, wR}}).is_zero());
}

TEST_CASE("branch_taylor in two parameters") {
  Ring R({"t1", "t2", "v"}, NumberField());
  NumberField Q;
  // v = t1 t2 branch of v^2 - t1^2 t2^2 at (1, 2), v0 = 2
  BranchPoint bp{R, 2, expr("v^2 - t1^2*t2^2", R), {rat(1), rat(2)}, Q,
                 Q.from_rational(rat(2)), 6};
  Series w = branch_taylor(bp);
  // exact branch (1+s1)(2+s2)
  CHECK(w.coeff(ExpVec{0, 0}) == Q.from_rational(rat(2)));
  CHECK(w.coeff(ExpVec{1, 0}) == Q.from_rational(rat(2)));
  CHECK(w.coeff(ExpVec{0, 1}) == Q.from_rational(rat(1)));
  CHECK(w.coeff(ExpVec{1, 1}) == Q.from_rational(rat(1)));
  CHECK(w.coeff(ExpVec{2, 0}) == Q.zero());
}

TEST_CASE("inverse_taylor") {
  Ring R({"t"}, NumberField());
  NumberField Q;
  Series inv = inverse_taylor(expr("t", R), {rat(2)}, 2);
  CHECK(inv.coeff(ExpVec{0}) == Q.from_rational(rat(1, 2)));
  CHECK(inv.coeff(ExpVec{1}) == Q.from_rational(rat(-1, 4)));
  CHECK(inv.coeff(ExpVec{2}) == Q.from_rational(rat(1, 8)));

  CHECK(inverse_taylor(expr("1", R), {rat(5)}, 4) ==
        Series::constant(R, rat(1)));

  try {
    inverse_taylor(expr("t", R), {rat(0)}, 3);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Errc::PoleAtPoint);
  }
}

TEST_CASE("specialize_family") {
  Ring R({"t1", "x1", "x2"}, NumberField());
  NumberField Q;
  Series y = expr("t1*x1 + t1^2*x2", R);
  Series sp = specialize_family(y, {0}, {Q.from_rational(rat(3))});
  CHECK(sp == expr("3*x1 + 9*x2", R));

  Series at0 = specialize_family(expr("1 + t1*x1 + x2", R), {0}, {Q.zero()});
  CHECK(at0 == expr("1 + x2", R));

  Series indep = expr("x1^2 - x2", R);
  CHECK(specialize_family(indep, {0}, {Q.from_rational(rat(7))}) == indep);
}
