#include "germkit/descent.hpp"

#include "germkit/discriminant.hpp"

namespace germkit {

Series lift_to_field(const Series& f, const Ring& target) {
  if (f.ring().nvars() != target.nvars())
    fail(Errc::RingMismatch, "lift_to_field requires positionally matching rings");
  if (!f.ring().field().is_rational())
    fail(Errc::RingMismatch, "lift_to_field starts from a series over Q");
  const NumberField& K = target.field();
  Series r(target, f.trunc());
  for (const auto& [e, c] : f.terms())
    r.add_term(e, K.from_rational(c.coords[0]));
  return r;
}

Series conjugate_map(const Series& f, const FieldElement& image) {
  const Ring& R = f.ring();
  const NumberField& K = R.field();
  Series r(R, f.trunc());
  for (const auto& [e, c] : f.terms()) {
    // c = sum c_k v^k evaluated at v = image.
    FieldElement acc = K.zero();
    for (int k = K.degree() - 1; k >= 0; --k) {
      acc = K.mul(acc, image);
      acc = K.add(acc, K.from_rational(c.coords[k]));
    }
    r.add_term(e, acc);
  }
  return r;
}

DescentResult basis_decompose(const Series& f) {
  const Ring& R = f.ring();
  const NumberField& K = R.field();
  const int d = K.degree();
  Ring rational_ring(R.vars(), NumberField());
  DescentResult res{R, rational_ring, {}};
  res.components.assign(d, Series(rational_ring, f.trunc()));
  NumberField Q;
  for (const auto& [e, c] : f.terms())
    for (int k = 0; k < d; ++k)
      res.components[k].add_term(e, Q.from_rational(c.coords[k]));
  return res;
}

Series descent_reassemble(const DescentResult& res, const Ring& source) {
  const NumberField& K = source.field();
  Series acc(source, res.components.empty() ? Trunc::exact() : res.components[0].trunc());
  for (std::size_t k = 0; k < res.components.size(); ++k) {
    Series lifted = lift_to_field(res.components[k], source);
    acc = acc + lifted.scaled(K.pow(K.gen(), k));
  }
  return acc;
}

std::optional<bool> vandermonde_verify(const DescentResult& res, const Series& f) {
  const Ring& R = res.source;
  const NumberField& K = R.field();
  auto conj = K.conjugates();
  if (!conj) return std::nullopt;
  const int d = K.degree();
  for (int j = 0; j < d; ++j) {
    // Row j of the Vandermonde matrix applied to the component vector.
    Series combo(R, f.trunc());
    for (int k = 0; k < d; ++k) {
      Series lifted = lift_to_field(res.components[k], R);
      combo = combo + lifted.scaled(K.pow((*conj)[j], k));
    }
    Series expected = conjugate_map(f, (*conj)[j]);
    if (!(combo - expected).is_zero()) return false;
  }
  return true;
}

Series branch_taylor(const BranchPoint& bp) {
  const Ring& RQ = bp.ring;
  if (RQ.nvars() != bp.num_t + 1)
    fail(Errc::ParseError, "branch ring must list the parameters then the root variable");
  if (static_cast<int>(bp.q.size()) != bp.num_t)
    fail(Errc::ParseError, "point arity mismatch");
  if (!bp.P.is_exact()) fail(Errc::ParseError, "P must be an exact polynomial");
  const int vvar = bp.num_t;
  const NumberField& K = bp.K;

  // Locus guards: discriminant and leading coefficient at q.
  {
    std::vector<Series> coeffs;
    int dv = bp.P.degree_in(vvar);
    if (dv < 1) fail(Errc::ParseError, "P must involve the root variable");
    for (int k = 0; k <= dv; ++k) coeffs.push_back(coeff_of_var_power(bp.P, vvar, k));
    std::vector<Series> dcoeffs(dv, Series(RQ));
    for (int k = 1; k <= dv; ++k)
      dcoeffs[k - 1] = coeffs[k].scaled(RQ.field().from_rational(Rational(k)));
    Series disc = resultant_coeffs(coeffs, dcoeffs, RQ);
    Point pq;
    for (int i = 0; i < bp.num_t; ++i)
      pq.coords.push_back(RQ.field().from_rational(bp.q[i]));
    pq.coords.push_back(RQ.field().zero()); // disc and lc are v-free
    if (RQ.field().is_zero(evaluate(disc, pq)))
      fail(Errc::OnDiscriminantLocus,
           "discriminant of P vanishes at the expansion point");
    if (RQ.field().is_zero(evaluate(coeffs[dv], pq)))
      fail(Errc::OnDiscriminantLocus,
           "leading coefficient of P vanishes at the expansion point");
  }

  // The root variable may share its name with the field generator; rename
  // positionally for the internal K-lift.
  std::vector<std::string> knames = RQ.vars();
  for (auto& nm : knames)
    if (nm == K.generator() && K.degree() > 1) nm = "__" + nm;
  Ring RK(knames, K);
  Series PK = lift_to_field(bp.P, RK);

  // Shift to the point: t_i -> q_i + t_i (reading t as the offset s).
  std::map<int, Series> shift;
  for (int i = 0; i < bp.num_t; ++i)
    shift.emplace(i, Series::constant(RK, K.from_rational(bp.q[i])) +
                         Series::variable(RK, i));
  Series Pq = compose(PK, shift);
  Series Pqv = derivative(Pq, vvar);

  // Root check at the origin of the shifted coordinates.
  {
    Point origin;
    for (int i = 0; i < bp.num_t; ++i) origin.coords.push_back(K.zero());
    origin.coords.push_back(bp.v0);
    if (!K.is_zero(evaluate(Pq, origin)))
      fail(Errc::NotARoot, "v0 is not a root of P at the expansion point");
  }

  const int N = bp.N;
  Series w = Series::constant(RK, bp.v0, Trunc::at(N));
  for (int pass = 0; pass < 2 * (N + 2); ++pass) {
    Series residual = compose(Pq, {{vvar, w}});
    if (residual.is_zero()) break;
    Series slope = compose(Pqv, {{vvar, w}});
    w = w - residual * inverse_unit(slope, N);
  }
  if (!compose(Pq, {{vvar, w}}).is_zero())
    fail(Errc::Internal, "branch Newton iteration did not close");

  // Drop the root variable from the carrier ring.
  std::vector<std::string> tnames;
  for (int i = 0; i < bp.num_t; ++i) tnames.push_back(RQ.var_name(i));
  Ring out(tnames, K);
  std::vector<int> vmap(RK.nvars(), -1);
  for (int i = 0; i < bp.num_t; ++i) vmap[i] = i;
  return map_to_ring(w, out, vmap);
}

Series inverse_taylor(const Series& R, const std::vector<Rational>& q, int N) {
  const Ring& ring = R.ring();
  if (!R.is_exact()) fail(Errc::ParseError, "R must be an exact polynomial");
  if (static_cast<int>(q.size()) != ring.nvars())
    fail(Errc::ParseError, "point arity mismatch");
  const NumberField& F = ring.field();
  std::map<int, Series> shift;
  for (int i = 0; i < ring.nvars(); ++i)
    shift.emplace(i, Series::constant(ring, F.from_rational(q[i])) +
                         Series::variable(ring, i));
  Series Rq = compose(R, shift);
  if (F.is_zero(Rq.constant_term()))
    fail(Errc::PoleAtPoint, "R vanishes at the expansion point");
  Series inv = inverse_unit(Rq, N);
  Series check = Rq * inv - Series::constant(ring, F.one(), Trunc::at(N));
  if (!check.is_zero()) fail(Errc::Internal, "inverse expansion failed its own check");
  return inv;
}

Series specialize_family(const Series& y, const std::vector<int>& tvars,
                         const std::vector<FieldElement>& q) {
  const Ring& R = y.ring();
  const NumberField& F = R.field();
  if (tvars.size() != q.size()) fail(Errc::ParseError, "point arity mismatch");
  std::vector<int> which(R.nvars(), -1);
  for (std::size_t i = 0; i < tvars.size(); ++i) which.at(tvars[i]) = static_cast<int>(i);

  Series out(R, y.trunc());
  for (const auto& [e, c] : y.terms()) {
    FieldElement val = c;
    ExpVec d = e;
    for (int v = 0; v < R.nvars(); ++v) {
      if (which[v] < 0 || e[v] == 0) continue;
      val = F.mul(val, F.pow(q[which[v]], e[v]));
      d[v] = 0;
    }
    out.add_term(d, val);
  }
  return out;
}

} // namespace germkit
