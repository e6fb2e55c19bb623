#include "germkit/weierstrass.hpp"

#include <algorithm>

namespace germkit {

Series WeierstrassPoly::as_series() const {
  Series acc(ring);
  ExpVec lead(ring.nvars(), 0);
  lead[dist_var] = degree;
  acc = Series::monomial(ring, lead, ring.field().one());
  for (int j = 1; j <= degree; ++j)
    acc = acc + mul_by_var_power(coeffs[j - 1], dist_var, degree - j);
  return acc;
}

bool WeierstrassPoly::distinguished() const {
  for (const auto& a : coeffs)
    if (!ring.field().is_zero(a.constant_term())) return false;
  return true;
}

WeierstrassPoly weierstrass_from_series(const Series& W, int var) {
  const Ring& R = W.ring();
  int p = W.degree_in(var);
  if (p < 0) p = 0;
  Series lead = coeff_of_var_power(W, var, p);
  FieldElement lc = lead.constant_term();
  Series lead_const = Series::constant(R, lc, lead.trunc());
  if (!(lead - lead_const).is_zero() || !(lc == R.field().one()))
    fail(Errc::Internal, "series is not monic in the distinguished variable");
  WeierstrassPoly wp{R, var, p, {}};
  for (int j = 1; j <= p; ++j)
    wp.coeffs.push_back(coeff_of_var_power(W, var, p - j));
  return wp;
}

std::optional<int> regularity_order(const Series& F, int var) {
  if (!F.ring().field().is_zero(F.constant_term())) return 0;
  Series axis = restrict_to_axis(F, var);
  if (axis.is_zero()) return std::nullopt;
  return axis.terms().begin()->first[var];
}

namespace {

long spiral_value(int k) { // 0, 1, -1, 2, -2, ...
  if (k == 0) return 0;
  int m = (k + 1) / 2;
  return (k % 2 == 1) ? m : -m;
}

std::vector<std::vector<long>> shear_matrix(int n, int var,
                                            const std::vector<int>& targets,
                                            const std::vector<long>& c) {
  std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) M[i][i] = 1;
  for (std::size_t k = 0; k < targets.size(); ++k) M[targets[k]][var] = c[k];
  return M;
}

} // namespace

TransverseResult make_transverse(const std::vector<Series>& G, int var,
                                 const std::set<int>& frozen, bool require_mult,
                                 int shear_bound) {
  if (G.empty()) fail(Errc::Internal, "make_transverse with no input");
  const Ring& R = G.front().ring();
  const int n = R.nvars();

  std::vector<int> mults;
  for (const auto& g : G) {
    Order o = ord(g);
    if (!o.is_finite())
      fail(Errc::TransversalityFailure,
           "input has no finite multiplicity at 0 (zero mod truncation)");
    mults.push_back(o.value);
  }

  std::vector<int> targets;
  for (int j = 0; j < n; ++j) {
    if (j == var || frozen.count(j)) continue;
    bool occurs = false;
    for (const auto& g : G)
      if (g.occurs(j)) occurs = true;
    if (occurs) targets.push_back(j);
  }

  auto try_candidate = [&](const std::vector<long>& c)
      -> std::optional<std::vector<int>> {
    auto M = shear_matrix(n, var, targets, c);
    std::vector<int> orders;
    for (std::size_t s = 0; s < G.size(); ++s) {
      Series g = targets.empty() ? G[s] : linear_change(G[s], M);
      auto p = regularity_order(g, var);
      if (!p) return std::nullopt;
      if (require_mult && *p != mults[s]) return std::nullopt;
      orders.push_back(*p);
    }
    return orders;
  };

  if (targets.empty()) {
    if (auto orders = try_candidate({}))
      return {shear_matrix(n, var, targets, {}), *orders};
    fail(Errc::SearchExhausted,
         "no shear targets available and identity fails for variable '" +
             R.var_name(var) + "'");
  }

  // Spiral enumeration: radius = max |c|, odometer over spiral indices
  // within each radius. Fixed order, so results are reproducible.
  const std::size_t m = targets.size();
  for (int radius = 0; radius <= shear_bound; ++radius) {
    const int k_max = 2 * radius;
    std::vector<int> idx(m, 0);
    while (true) {
      int have_radius = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (std::abs(spiral_value(idx[i])) == radius) have_radius = 1;
      if (have_radius) {
        std::vector<long> c(m);
        for (std::size_t i = 0; i < m; ++i) c[i] = spiral_value(idx[i]);
        if (auto orders = try_candidate(c))
          return {shear_matrix(n, var, targets, c), *orders};
      }
      std::size_t d = 0;
      while (d < m && idx[d] == k_max) idx[d++] = 0;
      if (d == m) break;
      ++idx[d];
    }
  }
  fail(Errc::SearchExhausted,
       "no integer shear with |c| <= " + std::to_string(shear_bound) +
           " achieves " + (require_mult ? "transversality" : "regularity") +
           " in variable '" + R.var_name(var) + "'");
}

namespace {

// Terms with var-exponent >= p, shifted down by var^p. Truncation follows
// the shift, which is where the D - p degradation of prepare comes from.
Series beta_part(const Series& h, int var, int p) {
  Series kept = h;
  if (p == 0) return kept;
  Series filtered(h.ring(), h.trunc());
  for (const auto& [e, c] : h.terms())
    if (e[var] >= p) filtered.add_term(e, c);
  if (filtered.is_zero()) {
    Trunc t = filtered.is_exact() ? Trunc::exact()
                                  : Trunc::at(filtered.trunc().degree() - p);
    return Series(h.ring(), t);
  }
  return divide_by_var_power(filtered, var, p);
}

Series alpha_part(const Series& h, int var, int p) {
  Series r(h.ring(), h.trunc());
  for (const auto& [e, c] : h.terms())
    if (e[var] < p) r.add_term(e, c);
  return r;
}

} // namespace

PreparationResult prepare(const Series& F, int var, int D) {
  const Ring& R = F.ring();
  const NumberField& K = R.field();
  auto reg = regularity_order(F, var);
  if (!reg)
    fail(Errc::NotRegularError,
         "series is not regular in variable '" + R.var_name(var) + "'");
  const int p = *reg;
  if (!F.is_exact()) D = std::min(D, F.trunc().degree());
  const int valid_to = D - p;
  if (valid_to < p)
    fail(Errc::TruncationBudgetExhausted,
         "truncation budget " + std::to_string(D) + " cannot certify a degree-" +
             std::to_string(p) + " preparation (valid_to = " + std::to_string(valid_to) + ")");

  if (p == 0) {
    WeierstrassPoly one{R, var, 0, {}};
    return {F, one, valid_to};
  }

  // Exact shortcut: F already a constant times a Weierstrass polynomial.
  if (F.is_exact()) {
    Series b = beta_part(F, var, p);
    if (b.terms().size() == 1 && total_degree(b.terms().begin()->first) == 0) {
      FieldElement c = b.constant_term();
      Series W = F.scaled(K.inv(c));
      return {Series::constant(R, c), weierstrass_from_series(W, var), valid_to};
    }
  }

  // Graded refinement by degree in the non-distinguished variables: with
  // level(term) = total degree - z-degree, F = U W is solved one level at a
  // time. Level 0 is the axis data z^p s(z); level m solves the Bezout split
  //   W_m s + z^p U_m = E_m,   E_m = F_m - sum_{0<i<m} W_i U_{m-i},
  // so W_m = (E_m s^{-1} mod z^p) and U_m = (E_m - W_m s)/z^p. Each level is
  // written exactly once, which keeps truncation noise strictly above the
  // certified range. U_m carries z-slices up to X(m) = (M-m+2)p - 1, enough
  // for every later consumer.
  auto remark = [](const Series& h, Trunc t) {
    Series out(h.ring(), t);
    for (const auto& [e, c] : h.terms()) out.add_term(e, c);
    return out;
  };
  auto level_part = [&](const Series& h, int m) {
    Series out(R);
    for (const auto& [e, c] : h.terms())
      if (total_degree(e) - e[var] == m) out.add_term(e, c);
    return out;
  };

  const int M = valid_to;
  Series Fw = remark(F, Trunc::exact());
  Series s = divide_by_var_power(level_part(Fw, 0), var, p);
  Series sinv_low = remark(inverse_unit(remark(s, Trunc::at(2 * p)), 2 * p - 1),
                           Trunc::exact());
  sinv_low = truncate_var_degree(sinv_low, var, p - 1);

  std::vector<Series> W_levels(M + 1, Series(R));
  std::vector<Series> U_levels(M + 1, Series(R));
  U_levels[0] = truncate_var_degree(s, var, (M + 2) * p - 1);
  for (int m = 1; m <= M; ++m) {
    Series E = level_part(Fw, m);
    for (int i = 1; i < m; ++i) E = E - W_levels[i] * U_levels[m - i];
    Series Wm = truncate_var_degree(E * sinv_low, var, p - 1);
    Series rest = E - Wm * s;
    if (max_var_power_dividing(rest, var) < p && !rest.is_zero())
      fail(Errc::Internal, "graded division left a low-order remainder");
    Series Um = rest.is_zero() ? rest : divide_by_var_power(rest, var, p);
    W_levels[m] = std::move(Wm);
    U_levels[m] = truncate_var_degree(Um, var, (M - m + 2) * p - 1);
  }

  Series Wseries = Series::monomial(R, [&] {
    ExpVec e(R.nvars(), 0);
    e[var] = p;
    return e;
  }(), K.one());
  for (int m = 1; m <= M; ++m) Wseries = Wseries + W_levels[m];
  Series unit(R, Trunc::at(valid_to));
  for (int m = 0; m <= M; ++m)
    for (const auto& [e, c] : U_levels[m].terms()) unit.add_term(e, c);

  WeierstrassPoly W{R, var, p, {}};
  for (int j = 1; j <= p; ++j)
    W.coeffs.push_back(
        remark(coeff_of_var_power(Wseries, var, p - j), Trunc::at(valid_to)));
  if (!W.distinguished())
    fail(Errc::Internal, "preparation produced a non-distinguished polynomial");
  return {std::move(unit), std::move(W), valid_to};
}

} // namespace germkit
