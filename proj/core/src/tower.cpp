#include "germkit/tower.hpp"

#include <algorithm>

namespace germkit {

namespace {

std::vector<std::vector<long>> identity_matrix(int n) {
  std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) M[i][i] = 1;
  return M;
}

bool is_identity(const std::vector<std::vector<long>>& M) {
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < M.size(); ++j)
      if (M[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

Series apply_change(const Series& f, const std::vector<std::vector<long>>& M) {
  return is_identity(M) ? f : linear_change(f, M);
}

void check_common(const InputGerm& germ) {
  if (germ.defining.empty()) fail(Errc::ParseError, "germ has no defining equations");
  if (germ.truncation < 1) fail(Errc::ParseError, "truncation budget must be >= 1");
  const NumberField& F = germ.ring.field();
  for (const auto& g : germ.defining) {
    if (!(g.ring() == germ.ring)) fail(Errc::RingMismatch, "defining equation in wrong ring");
    if (!g.is_exact()) fail(Errc::ParseError, "defining equations must be exact polynomials");
    if (g.is_zero()) fail(Errc::ParseError, "defining equation is identically zero");
    if (!F.is_zero(g.constant_term()))
      fail(Errc::ParseError, "defining equation does not vanish at the origin");
  }
}

// Effective working degree left in a series, or `fallback` when exact.
int budget_of(const Series& s, int fallback) {
  return s.is_exact() ? fallback : std::min(fallback, s.trunc().degree());
}

WeierstrassPoly trivial_poly(const Ring& R, int var) {
  return WeierstrassPoly{R, std::max(var, 0), 0, {}};
}

// Shared descent: from the stage-n polynomial down to the terminal constant.
void descend(Tower& tower, WeierstrassPoly current, int level, int budget,
             const InputGerm& germ, bool function_mode) {
  const Ring& R = germ.ring;
  while (current.degree >= 1) {
    DiscriminantRecord rec;
    try {
      rec = first_nonvanishing(current);
    } catch (const Error& e) {
      if (e.kind() == Errc::AllVanish)
        fail(Errc::AllVanish, e.detail() + " (deepest completed level " +
                                  std::to_string(level) + ")");
      throw;
    }
    int q = 0;
    Series delta = rec.delta;
    if (function_mode) {
      q = max_var_power_dividing(delta, 0);
      delta = divide_by_var_power(delta, 0, q);
    }

    Order o = ord(delta);
    if (!o.is_finite())
      fail(Errc::TruncationBudgetExhausted,
           "discriminant vanishes mod truncation at level " + std::to_string(level));
    if (o.value == 0) {
      // Unit discriminant: terminal stage, p = 0, F_{level-1} = 1.
      TowerStage st;
      st.level = level - 1;
      st.f = trivial_poly(R, level - 2);
      st.unit = delta;
      st.disc = rec;
      st.change = identity_matrix(R.nvars());
      st.q = q;
      st.valid_to = budget_of(delta, budget);
      tower.stages.push_back(std::move(st));
      return;
    }

    const int target = level - 2; // 0-based index of x_{level-1}
    if (target < 0 || (function_mode && target == 0))
      fail(Errc::Internal, "descent reached the preserved coordinate with a nonunit discriminant");

    std::set<int> frozen;
    if (function_mode) frozen.insert(0);
    TransverseResult tr;
    try {
      tr = make_transverse({delta}, target, frozen, /*require_mult=*/!function_mode,
                           germ.shear_bound);
    } catch (const Error& e) {
      if (e.kind() == Errc::SearchExhausted || e.kind() == Errc::TransversalityFailure)
        fail(e.kind(), e.detail() + " (level " + std::to_string(level - 1) + ")");
      throw;
    }
    Series delta_ch = apply_change(delta, tr.matrix);
    const int p_next = tr.orders[0];
    const int work = budget_of(delta_ch, budget);
    if (work - p_next < p_next)
      fail(Errc::TruncationBudgetExhausted,
           "budget " + std::to_string(work) + " too small for a degree-" +
               std::to_string(p_next) + " preparation at level " +
               std::to_string(level - 1) + " (deepest completed level " +
               std::to_string(level) + ")");
    PreparationResult prep = prepare(delta_ch, target, work);

    tower.transversality.push_back(
        {level - 1, tr.orders, {o.is_finite() ? o.value : -1}, !function_mode});

    TowerStage st;
    st.level = level - 1;
    st.f = prep.poly;
    st.unit = prep.unit;
    st.disc = rec;
    st.change = tr.matrix;
    st.q = q;
    st.valid_to = prep.valid_to;
    tower.stages.push_back(st);

    current = prep.poly;
    budget = prep.valid_to;
    --level;
  }
}

} // namespace

Tower build_set_tower(const InputGerm& germ) {
  if (germ.kind != GermKind::Set) fail(Errc::ParseError, "germ is not a set germ");
  check_common(germ);
  const Ring& R = germ.ring;
  const int n = R.nvars();
  if (n < 1) fail(Errc::ParseError, "ambient dimension must be >= 1");
  const int D = germ.truncation;

  Tower tower;
  tower.kind = GermKind::Set;
  tower.ring = R;

  std::vector<int> mults;
  for (const auto& g : germ.defining) mults.push_back(ord(g).value);

  TransverseResult tr =
      make_transverse(germ.defining, n - 1, {}, /*require_mult=*/true, germ.shear_bound);
  tower.transversality.push_back({n, tr.orders, mults, true});

  Series fn_series(R);
  Series unit(R);
  bool first = true;
  int p_n = 0;
  for (std::size_t s = 0; s < germ.defining.size(); ++s) {
    Series g = apply_change(germ.defining[s], tr.matrix);
    PreparationResult prep = prepare(g, n - 1, D);
    if (prep.poly.degree != mults[s])
      fail(Errc::TransversalityFailure,
           "prepared degree does not match the multiplicity of equation " + std::to_string(s));
    p_n += prep.poly.degree;
    if (first) {
      fn_series = prep.poly.as_series();
      unit = prep.unit;
      first = false;
    } else {
      fn_series = fn_series * prep.poly.as_series();
      unit = unit * prep.unit;
    }
  }
  if (!fn_series.trunc().allows_degree(p_n))
    fail(Errc::TruncationBudgetExhausted,
         "budget " + std::to_string(D) + " cannot hold the degree-" +
             std::to_string(p_n) + " product at the top stage");
  WeierstrassPoly f_n = weierstrass_from_series(fn_series, n - 1);

  TowerStage top;
  top.level = n;
  top.f = f_n;
  top.unit = unit;
  top.change = tr.matrix;
  top.q = 0;
  top.valid_to = D - p_n;
  tower.stages.push_back(top);

  descend(tower, f_n, n, D - p_n, germ, /*function_mode=*/false);
  return tower;
}

Tower build_function_tower(const InputGerm& germ) {
  if (germ.kind != GermKind::Function) fail(Errc::ParseError, "germ is not a function germ");
  check_common(germ);
  const Ring& R = germ.ring;
  const NumberField& F = R.field();
  const int n = R.nvars();
  if (n < 2) fail(Errc::ParseError, "function towers need ambient dimension >= 2");
  const int D = germ.truncation;

  for (const auto& g : germ.defining)
    if (g.occurs(0))
      fail(Errc::ParseError,
           "function-germ equations must not involve the reserved variable '" +
               R.var_name(0) + "'");

  Tower tower;
  tower.kind = GermKind::Function;
  tower.ring = R;

  // b_{m,k}: each monomial goes to its lowest-index dividing variable.
  tower.b.assign(germ.defining.size(), std::vector<Series>(n, Series(R)));
  for (std::size_t m = 0; m < germ.defining.size(); ++m) {
    for (const auto& [e, c] : germ.defining[m].terms()) {
      int k = 1;
      while (k < n && e[k] == 0) ++k;
      if (k == n) fail(Errc::Internal, "term without a splittable variable");
      ExpVec d = e;
      d[k] -= 1;
      tower.b[m][k].add_term(d, c);
    }
  }

  Series x1 = Series::variable(R, 0);
  Series product = Series::constant(R, F.one());
  for (std::size_t m = 0; m < germ.defining.size(); ++m) {
    Series sum(R);
    for (int k = 1; k < n; ++k)
      sum = sum + tower.b[m][k] * Series::variable(R, k);
    product = product * (x1 - sum);
  }

  TransverseResult tr =
      make_transverse({product}, n - 1, {0}, /*require_mult=*/false, germ.shear_bound);
  tower.transversality.push_back({n, tr.orders, {ord(product).value}, false});

  Series prepared_input = apply_change(product, tr.matrix);
  PreparationResult prep = prepare(prepared_input, n - 1, D);

  TowerStage top;
  top.level = n;
  top.f = prep.poly;
  top.unit = prep.unit;
  top.change = tr.matrix;
  top.q = 0;
  top.valid_to = prep.valid_to;
  tower.stages.push_back(top);

  descend(tower, prep.poly, n, prep.valid_to, germ, /*function_mode=*/true);
  return tower;
}

namespace {

Series source_product(const Tower& t, const InputGerm& germ) {
  const Ring& R = germ.ring;
  const NumberField& F = R.field();
  if (t.kind == GermKind::Set) {
    Series prod = Series::constant(R, F.one());
    for (const auto& g : germ.defining) prod = prod * g;
    return prod;
  }
  Series x1 = Series::variable(R, 0);
  Series prod = Series::constant(R, F.one());
  for (const auto& g : germ.defining) prod = prod * (x1 - g);
  return prod;
}

} // namespace

TowerReport verify_tower(const Tower& t, const InputGerm& germ) {
  TowerReport report;
  report.ok = true;
  if (t.stages.empty()) {
    report.ok = false;
    report.stages.push_back({0, false, -1, 0, false, "tower has no stages"});
    return report;
  }
  const Ring& R = germ.ring;

  // Function mode: the b-table must reassemble the inputs exactly.
  if (t.kind == GermKind::Function) {
    for (std::size_t m = 0; m < germ.defining.size(); ++m) {
      Series sum(R);
      for (int k = 1; k < R.nvars(); ++k)
        sum = sum + t.b[m][k] * Series::variable(R, k);
      if (!(sum - germ.defining[m]).is_zero()) {
        report.ok = false;
        report.stages.push_back({t.stages.front().level, false, -1, 0, false,
                                 "b-table does not reassemble equation " + std::to_string(m)});
      }
    }
  }

  // Top stage: u_n f_n against the transformed defining product.
  {
    const TowerStage& top = t.stages.front();
    StageCheck chk;
    chk.level = top.level;
    chk.checked_to = top.valid_to;
    Series lhs = top.unit * top.f.as_series();
    Series rhs;
    if (t.kind == GermKind::Set) {
      const NumberField& F = R.field();
      Series prod = Series::constant(R, F.one());
      for (const auto& g : germ.defining)
        prod = prod * apply_change(g, top.change);
      rhs = prod;
    } else {
      rhs = apply_change(source_product(t, germ), top.change);
    }
    chk.agreement_degree = agreement_degree(lhs, rhs, chk.checked_to);
    chk.reconstruction_ok = chk.agreement_degree >= chk.checked_to;
    if (!chk.reconstruction_ok) {
      chk.note = "top-stage product mismatch";
      report.ok = false;
    }
    report.stages.push_back(std::move(chk));
  }

  for (std::size_t idx = 1; idx < t.stages.size(); ++idx) {
    const TowerStage& parent = t.stages[idx - 1];
    const TowerStage& st = t.stages[idx];
    StageCheck chk;
    chk.level = st.level;
    chk.checked_to = st.valid_to;
    if (!st.disc) {
      chk.note = "missing discriminant record";
      chk.reconstruction_ok = false;
      report.ok = false;
      report.stages.push_back(std::move(chk));
      continue;
    }
    // Vanishing ledger, recomputed from the stage above.
    for (int k = 1; k < st.disc->j; ++k) {
      Series dk = gen_disc(parent.f, k);
      if (!dk.is_zero()) {
        chk.vanishing_ok = false;
        chk.note = "Delta_" + std::to_string(k) + " expected to vanish but does not";
      }
    }
    Series delta = gen_disc(parent.f, st.disc->j);
    Series lhs = mul_by_var_power(st.unit * st.f.as_series(), 0, st.q);
    Series rhs = apply_change(delta, st.change);
    chk.agreement_degree = agreement_degree(lhs, rhs, chk.checked_to);
    chk.reconstruction_ok = chk.agreement_degree >= chk.checked_to;
    if (!chk.reconstruction_ok && chk.note.empty())
      chk.note = "stage identity mismatch";
    if (!chk.reconstruction_ok || !chk.vanishing_ok) report.ok = false;
    report.stages.push_back(std::move(chk));
  }
  return report;
}

} // namespace germkit
