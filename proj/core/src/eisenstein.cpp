#include "germkit/eisenstein.hpp"

#include <algorithm>
#include <sstream>

namespace germkit {

namespace {

// Series in the x variables with rational-function coefficients in t:
// the coefficient field the independent expansion works over.
using RFSeries = std::map<ExpVec, RationalFunction, GradedLexLess>;

void rfs_add_term(RFSeries& f, const ExpVec& e, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = f.emplace(e, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) f.erase(it);
  }
}

RFSeries rfs_add(const RFSeries& a, const RFSeries& b) {
  RFSeries r = a;
  for (const auto& [e, c] : b) rfs_add_term(r, e, c);
  return r;
}

RFSeries rfs_mul(const RFSeries& a, const RFSeries& b, int cap) {
  RFSeries r;
  for (const auto& [ea, ca] : a) {
    int da = total_degree(ea);
    if (da > cap) continue;
    for (const auto& [eb, cb] : b) {
      if (da + total_degree(eb) > cap) continue;
      ExpVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      rfs_add_term(r, e, ca * cb);
    }
  }
  return r;
}

RFSeries rfs_layer(const RFSeries& f, int k) {
  RFSeries r;
  for (const auto& [e, c] : f)
    if (total_degree(e) == k) r.emplace(e, c);
  return r;
}

int rfs_min_degree(const RFSeries& f) {
  return f.empty() ? -1 : total_degree(f.begin()->first);
}

std::string rfs_term_str(const ExpVec& e) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out << ",";
    out << e[i];
  }
  out << "]";
  return out.str();
}

struct SeedContext {
  const BranchSeed& bs;

  std::vector<int> t_identity() const {
    std::vector<int> m(bs.tring.nvars());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<int>(i);
    return m;
  }

  // Work-ring series with only t/x support -> RFSeries over tring.
  RFSeries to_rfs(const Series& s, int cap) const {
    RFSeries out;
    for (const auto& [e, c] : s.terms()) {
      ExpVec xs(bs.num_x, 0);
      Series tmono(bs.tring);
      ExpVec te(bs.tring.nvars(), 0);
      for (int i = 0; i < bs.num_t; ++i) te[i] = e[i];
      for (int i = 0; i < bs.num_x; ++i) xs[i] = e[bs.x_var(i)];
      if (e[bs.y_var()] != 0 || e[bs.u_var()] != 0)
        fail(Errc::Internal, "series has residual y/u dependence");
      if (total_degree(xs) > cap) continue;
      tmono.add_term(te, c);
      rfs_add_term(out, xs, RationalFunction(tmono));
    }
    return out;
  }

  // P(x, f(x)) truncated at x-degree cap, f given over the rational function
  // field. Horner in y; every product capped.
  RFSeries eval_at(const Series& poly, const RFSeries& f, int cap) const {
    int dy = poly.degree_in(bs.y_var());
    if (dy < 0) dy = 0;
    RFSeries acc = to_rfs(coeff_of_var_power(poly, bs.y_var(), dy), cap);
    for (int l = dy - 1; l >= 0; --l) {
      acc = rfs_mul(acc, f, cap);
      acc = rfs_add(acc, to_rfs(coeff_of_var_power(poly, bs.y_var(), l), cap));
    }
    return acc;
  }
};

// Exact division of homogeneous numer by homogeneous denom over the
// rational-function coefficients, by graded-lex lead-term elimination.
RFSeries divide_homogeneous(RFSeries numer, const RFSeries& denom) {
  if (denom.empty()) fail(Errc::Internal, "homogeneous division by zero layer");
  RFSeries q;
  const auto& dlead = *denom.rbegin();
  while (!numer.empty()) {
    const auto& nlead = *numer.rbegin();
    ExpVec e(nlead.first.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = nlead.first[i] - dlead.first[i];
      if (e[i] < 0)
        fail(Errc::Internal, "homogeneous layer division failed (inconsistent expansion)");
    }
    RationalFunction c = nlead.second / dlead.second;
    RFSeries mono;
    mono.emplace(e, c);
    rfs_add_term(q, e, c);
    RFSeries sub = rfs_mul(mono, denom, total_degree(nlead.first));
    for (auto& [se, sc] : sub) rfs_add_term(numer, se, -sc);
  }
  return q;
}

} // namespace

std::pair<Ring, Ring> make_eisenstein_rings(const std::vector<std::string>& tvars,
                                            const std::vector<std::string>& xvars,
                                            const std::string& yvar,
                                            const NumberField& field) {
  std::vector<std::string> names = tvars;
  names.insert(names.end(), xvars.begin(), xvars.end());
  names.push_back(yvar);
  names.push_back("__u");
  Ring work(names, field);
  Ring tring(tvars, field);
  return {work, tring};
}

BranchSeed make_branch_seed(Ring work, Ring tring, int num_t, int num_x, Series P,
                            std::map<ExpVec, RationalFunction, GradedLexLess> seed,
                            int seed_degree) {
  BranchSeed bs{std::move(work), std::move(tring), num_t, num_x, std::move(P),
                std::move(seed), seed_degree};
  if (bs.work.nvars() != num_t + num_x + 2)
    fail(Errc::ParseError, "work ring must hold t..., x..., y and the internal variable");
  if (!bs.P.is_exact() || bs.P.is_zero())
    fail(Errc::ParseError, "minimal polynomial must be a nonzero exact polynomial");
  if (!(bs.P.ring() == bs.work)) fail(Errc::RingMismatch, "P not in the work ring");
  if (bs.P.occurs(bs.u_var()))
    fail(Errc::ParseError, "P must not involve the internal homogenization variable");
  if (bs.P.degree_in(bs.y_var()) < 1)
    fail(Errc::ParseError, "P must involve the series variable");
  if (seed_degree < 0) fail(Errc::ParseError, "seed degree must be >= 0");
  for (const auto& [e, c] : bs.seed) {
    if (static_cast<int>(e.size()) != num_x)
      fail(Errc::ParseError, "seed exponent arity mismatch");
    if (total_degree(e) > seed_degree)
      fail(Errc::ParseError, "seed entry above the declared seed degree");
    if (!(c.ring() == bs.tring))
      fail(Errc::RingMismatch, "seed coefficient not over the parameter ring");
  }

  // Consistency witness: P(x, seed) must vanish through the seeded degree.
  SeedContext ctx{bs};
  RFSeries residual = ctx.eval_at(bs.P, bs.seed, seed_degree);
  if (!residual.empty())
    fail(Errc::DivisibilityFailure,
         "seed inconsistent with the minimal polynomial: P(x, f) has a term at x^" +
             rfs_term_str(residual.begin()->first));
  return bs;
}

int compute_e(const BranchSeed& bs) {
  SeedContext ctx{bs};
  Series Py = derivative(bs.P, bs.y_var());
  RFSeries q = ctx.eval_at(Py, bs.seed, bs.seed_degree);
  int e = rfs_min_degree(q);
  if (e < 0)
    fail(Errc::SeedTooShort,
         "order of dP/dy on the seed not witnessed through degree " +
             std::to_string(bs.seed_degree) + "; supply the expansion at least to degree " +
             std::to_string(bs.seed_degree + 1));
  return e;
}

std::pair<Series, BranchSeed> clear_denominators(const BranchSeed& bs, int e) {
  if (bs.seed_degree < 2 * e + 1)
    fail(Errc::SeedTooShort,
         "clearing needs the seed through degree 2e+1 = " + std::to_string(2 * e + 1) +
             ", have " + std::to_string(bs.seed_degree));
  const NumberField& F = bs.tring.field();
  Series b = Series::constant(bs.tring, F.one());
  for (const auto& [alpha, c] : bs.seed)
    if (total_degree(alpha) <= 2 * e + 1) b = poly_lcm(b, c.den());

  RationalFunction bRF{b};
  std::map<ExpVec, RationalFunction, GradedLexLess> cleared;
  for (const auto& [alpha, c] : bs.seed) {
    RationalFunction v = c * bRF;
    if (total_degree(alpha) <= 2 * e + 1 && !v.is_polynomial())
      fail(Errc::Internal, "lcm of denominators failed to clear a seed entry");
    if (!v.is_zero()) cleared.emplace(alpha, std::move(v));
  }

  SeedContext ctx{bs};
  Series b_w = map_to_ring(b, bs.work, ctx.t_identity());
  int dy = bs.P.degree_in(bs.y_var());
  Series Pb(bs.work);
  for (int l = 0; l <= dy; ++l) {
    Series c = coeff_of_var_power(bs.P, bs.y_var(), l);
    Series term = c * b_w.pow(dy - l);
    Pb = Pb + mul_by_var_power(term, bs.y_var(), l);
  }

  BranchSeed out = make_branch_seed(bs.work, bs.tring, bs.num_t, bs.num_x, Pb,
                                    std::move(cleared), bs.seed_degree);
  if (compute_e(out) != e)
    fail(Errc::Internal, "e changed under denominator clearing");
  return {b, out};
}

EisensteinResult eisenstein_extract(const BranchSeed& bs, int out_degree) {
  if (out_degree < 0) fail(Errc::ParseError, "out_degree must be >= 0");
  const int e = compute_e(bs);
  auto [b, c] = clear_denominators(bs, e);
  const Ring& W = c.work;
  const NumberField& F = W.field();
  const int yv = c.y_var();
  const int uv = c.u_var();

  // f*^{(2e+1)}: the seeded layers, x-degree graded by the u power.
  Series fstar(W);
  for (const auto& [alpha, coeff] : c.seed) {
    int k = total_degree(alpha);
    if (k > 2 * e + 1) continue;
    ExpVec em(W.nvars(), 0);
    for (int i = 0; i < c.num_x; ++i) em[c.x_var(i)] = alpha[i];
    em[uv] = k;
    SeedContext ctx{c};
    Series lifted = map_to_ring(coeff.num(), W, ctx.t_identity());
    fstar = fstar + Series::monomial(W, em, F.one()) * lifted;
  }

  std::map<int, Series> homog;
  for (int i = 0; i < c.num_x; ++i)
    homog.emplace(c.x_var(i),
                  Series::variable(W, uv) * Series::variable(W, c.x_var(i)));
  Series Pstar = compose(c.P, homog);

  Series T1 = compose(Pstar, {{yv, fstar}});
  if (!T1.is_zero() && max_var_power_dividing(T1, uv) < 2 * e + 2)
    fail(Errc::DivisibilityFailure,
         "P*(u, x, f*) is not divisible by u^(2e+2); seed inconsistent with P");

  Series DT = compose(derivative(Pstar, yv), {{yv, fstar}});
  if (DT.is_zero() || max_var_power_dividing(DT, uv) != e)
    fail(Errc::DivisibilityFailure, "dP*/dy(u, x, f*) does not have u-order e");
  Series R = coeff_of_var_power(DT, uv, e);

  Series shift = mul_by_var_power(Series::variable(W, yv), uv, e + 1) + fstar;
  Series Esub = compose(Pstar, {{yv, shift}});
  if (Esub.is_zero() || max_var_power_dividing(Esub, uv) < 2 * e + 1)
    fail(Errc::Internal, "shifted equation lost its guaranteed u-order");
  Series E = divide_by_var_power(Esub, uv, 2 * e + 1);

  Series Rsq = R * R;
  Series Gnum = compose(E, {{uv, Rsq * Series::variable(W, uv)},
                            {yv, R * Series::variable(W, yv)}});
  auto Gdiv = exact_divide(Gnum, Rsq);
  if (!Gdiv)
    fail(Errc::DivisibilityFailure,
         "R^2 does not divide the rescaled equation; seed inconsistent with P");
  Series G = truncate_var_degree(*Gdiv, uv, out_degree);

  // Hensel form: y-linear coefficient 1 + u(...), constant layer in (u).
  Series G1 = coeff_of_var_power(G, yv, 1);
  Series G10 = coeff_of_var_power(G1, uv, 0) -
               Series::constant(W, F.one());
  Series G0 = coeff_of_var_power(G, yv, 0);
  if (!G10.is_zero() ||
      (!G0.is_zero() && max_var_power_dividing(G0, uv) < 1))
    fail(Errc::HenselStall,
         "rescaled equation is not in Hensel form (linear term not a unit mod u)");

  const int dyG = std::max(G.degree_in(yv), 0);
  std::vector<Series> Gcoeff;
  for (int l = 0; l <= dyG; ++l) Gcoeff.push_back(coeff_of_var_power(G, yv, l));
  auto eval_G = [&](const Series& S) {
    Series acc = Gcoeff[dyG];
    for (int l = dyG - 1; l >= 0; --l)
      acc = truncate_var_degree(acc * S, uv, out_degree) + Gcoeff[l];
    return acc;
  };

  // One u-order per pass; quadratic terms all carry a u factor.
  Series S(W);
  bool converged = false;
  for (int pass = 0; pass <= out_degree + 1; ++pass) {
    Series residual = eval_G(S);
    if (residual.is_zero()) {
      converged = true;
      break;
    }
    S = truncate_var_degree(S - residual, uv, out_degree);
  }
  if (!converged) fail(Errc::Internal, "Hensel iteration did not close");

  std::vector<int> xvars;
  for (int i = 0; i < c.num_x; ++i) xvars.push_back(c.x_var(i));
  Series r_t = content_wrt_vars(R, xvars);
  auto Rt = exact_divide(R, r_t);
  if (!Rt) fail(Errc::Internal, "content does not divide R");
  Series Rtilde = *Rt;

  EisensteinResult res;
  res.e = e;
  res.b = b;
  res.out_degree = out_degree;
  res.tring = c.tring;
  {
    std::vector<std::string> txnames;
    for (int i = 0; i < c.num_t; ++i) txnames.push_back(W.var_name(i));
    for (int i = 0; i < c.num_x; ++i) txnames.push_back(W.var_name(c.x_var(i)));
    res.txring = Ring(txnames, F);
  }
  {
    std::vector<int> txmap(W.nvars(), -1);
    for (int i = 0; i < c.num_t; ++i) txmap[i] = i;
    for (int i = 0; i < c.num_x; ++i) txmap[c.x_var(i)] = c.num_t + i;
    res.Rfull = map_to_ring(R, res.txring, txmap);
  }
  {
    SeedContext ctx{c};
    std::vector<int> tmap(W.nvars(), -1);
    for (int i = 0; i < c.num_t; ++i) tmap[i] = i;
    res.r = map_to_ring(r_t, c.tring, tmap);

    for (int k = 0; k <= out_degree; ++k) {
      Series Nk(W);
      if (k <= 2 * e + 1) {
        Series Lk(W);
        for (const auto& [alpha, coeff] : c.seed) {
          if (total_degree(alpha) != k) continue;
          ExpVec em(W.nvars(), 0);
          for (int i = 0; i < c.num_x; ++i) em[c.x_var(i)] = alpha[i];
          Lk = Lk + Series::monomial(W, em, F.one()) *
                        map_to_ring(coeff.num(), W, ctx.t_identity());
        }
        if (k == 0) {
          if (!Lk.is_zero()) {
            auto q = exact_divide(Lk, r_t);
            if (!q)
              fail(Errc::DivisibilityFailure,
                   "content r does not divide the constant layer");
            Nk = *q;
          }
        } else {
          Nk = Lk * r_t.pow(2 * k - 1);
        }
      } else {
        int j = k - e - 1;
        Series Sj = coeff_of_var_power(S, uv, j);
        if (!Sj.is_zero()) {
          auto q = exact_divide(Sj, Rtilde.pow(2 * k - 2 * e - 3));
          if (!q)
            fail(Errc::DivisibilityFailure,
                 "primitive part of R does not divide the Hensel layer " +
                     std::to_string(k));
          Nk = *q * r_t.pow(2 * e + 2);
        }
      }
      // N_k is the x-homogeneous degree-k layer scaled into Q[t].
      std::map<ExpVec, Series, GradedLexLess> split;
      for (const auto& [em, coeff] : Nk.terms()) {
        ExpVec alpha(c.num_x, 0);
        int xdeg = 0;
        for (int i = 0; i < c.num_x; ++i) {
          alpha[i] = em[c.x_var(i)];
          xdeg += alpha[i];
        }
        if (xdeg != k)
          fail(Errc::Internal, "recovered layer is not x-homogeneous");
        ExpVec te(c.tring.nvars(), 0);
        for (int i = 0; i < c.num_t; ++i) te[i] = em[i];
        auto [it, inserted] = split.emplace(alpha, Series(c.tring));
        it->second.add_term(te, coeff);
      }
      for (auto& [alpha, poly] : split)
        if (!poly.is_zero()) res.numerators.emplace(alpha, std::move(poly));
    }
  }
  return res;
}

EisensteinReport verify_eisenstein(const EisensteinResult& res, const BranchSeed& bs,
                                   int check_degree) {
  if (check_degree > res.out_degree)
    fail(Errc::ParseError, "check_degree exceeds the extraction's out_degree");
  EisensteinReport report;
  report.checked_to = check_degree;

  // Independent expansion over Q(t): order-by-order homogeneous solving.
  SeedContext ctx{bs};
  const int e = compute_e(bs);
  Series Py = derivative(bs.P, bs.y_var());
  RFSeries f = bs.seed;
  RFSeries Le = rfs_layer(ctx.eval_at(Py, f, e), e);
  if (Le.empty()) fail(Errc::Internal, "derivative layer vanished unexpectedly");

  for (int m = bs.seed_degree + 1; m <= check_degree; ++m) {
    RFSeries Pv = ctx.eval_at(bs.P, f, m + e);
    int low = rfs_min_degree(Pv);
    if (low >= 0 && low < m + e) {
      report.ok = false;
      report.mismatches.push_back("expansion stalled: P(f) has a surviving term at degree " +
                                  std::to_string(low));
      return report;
    }
    RFSeries Lm = rfs_layer(Pv, m + e);
    if (Lm.empty()) continue;
    for (auto& [le, lc] : Lm) lc = -lc;
    RFSeries ym = divide_homogeneous(Lm, Le);
    for (const auto& [a, v] : ym) rfs_add_term(f, a, v);
  }

  RationalFunction bRF{res.b};
  RationalFunction rRF{res.r};

  // Every alpha with |alpha| <= check_degree, in graded-lex order.
  std::vector<ExpVec> alphas;
  ExpVec cur(bs.num_x, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == bs.num_x) {
      alphas.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
    cur[pos] = 0;
  };
  for (int d = 0; d <= check_degree; ++d) rec(rec, 0, d);

  for (const auto& alpha : alphas) {
    if (total_degree(alpha) > check_degree) continue;
    int k = total_degree(alpha);
    RationalFunction oracle;
    if (auto it = f.find(alpha); it != f.end()) oracle = it->second;
    else oracle = RationalFunction(Series(bs.tring));

    Series N(bs.tring);
    if (auto it = res.numerators.find(alpha); it != res.numerators.end()) N = it->second;
    RationalFunction pipeline;
    if (k == 0)
      pipeline = RationalFunction(N * res.r, res.b);
    else
      pipeline = RationalFunction(N, res.b * res.r.pow(2 * k - 1));

    if (!(pipeline == oracle)) {
      report.ok = false;
      report.mismatches.push_back(
          "coefficient mismatch at x^" + rfs_term_str(alpha) + ": pipeline " +
          to_string(pipeline.num()) + " / " + to_string(pipeline.den()) + ", expansion " +
          to_string(oracle.num()) + " / " + to_string(oracle.den()));
    }
  }
  return report;
}

} // namespace germkit
