#include "germkit/polygcd.hpp"

#include <algorithm>
#include <map>

namespace germkit {

namespace {

void require_exact(const Series& f, const char* who) {
  if (!f.is_exact())
    fail(Errc::Internal, std::string(who) + " needs exact polynomial input");
}

// f as a dense coefficient vector in variable v, low degree first.
std::vector<Series> to_univariate(const Series& f, int v) {
  int d = std::max(f.degree_in(v), 0);
  std::vector<Series> c;
  c.reserve(d + 1);
  for (int k = 0; k <= d; ++k) c.push_back(coeff_of_var_power(f, v, k));
  while (c.size() > 1 && c.back().is_zero()) c.pop_back();
  return c;
}

Series from_univariate(const std::vector<Series>& c, int v) {
  if (c.empty()) fail(Errc::Internal, "empty coefficient vector");
  Series acc(c[0].ring());
  for (std::size_t k = 0; k < c.size(); ++k)
    acc = acc + mul_by_var_power(c[k], v, static_cast<int>(k));
  return acc;
}

int univ_deg(const std::vector<Series>& c) {
  int d = static_cast<int>(c.size()) - 1;
  while (d > 0 && c[d].is_zero()) --d;
  return c[d].is_zero() ? -1 : d;
}

bool coeffs_all_constant(const std::vector<Series>& c) {
  for (const auto& s : c)
    for (const auto& [e, a] : s.terms())
      if (total_degree(e) > 0) return false;
  return true;
}

// Monic Euclidean remainder chain for univariate polynomials with constant
// coefficients; avoids the pseudo-remainder growth entirely.
Series monic_euclid(std::vector<Series> a, std::vector<Series> b, int v) {
  const Ring& R = a[0].ring();
  const NumberField& F = R.field();
  auto lc = [&](const std::vector<Series>& p) { return p[univ_deg(p)].constant_term(); };
  auto make_monic = [&](std::vector<Series>& p) {
    FieldElement inv = F.inv(lc(p));
    for (auto& s : p) s = s.scaled(inv);
  };
  while (univ_deg(b) >= 0) {
    make_monic(b);
    // a mod b
    while (univ_deg(a) >= univ_deg(b)) {
      int da = univ_deg(a), db = univ_deg(b);
      FieldElement c = lc(a);
      for (int k = 0; k <= db; ++k) {
        Series sub = b[k].scaled(c);
        a[k + da - db] = a[k + da - db] - sub;
      }
      if (univ_deg(a) == da) fail(Errc::Internal, "euclid step did not reduce degree");
      if (univ_deg(a) < 0) break;
    }
    std::swap(a, b);
  }
  if (univ_deg(a) < 0) return Series(R);
  make_monic(a);
  return from_univariate(a, v);
}

std::vector<Series> pseudo_rem(std::vector<Series> a, const std::vector<Series>& b, int v) {
  int db = univ_deg(b);
  const Series& lcb = b[db];
  while (true) {
    int da = univ_deg(a);
    if (da < db || da < 0) break;
    Series lca = a[da];
    // a <- lcb*a - lca*x^(da-db)*b
    for (auto& s : a) s = s * lcb;
    for (int k = 0; k <= db; ++k)
      a[k + da - db] = a[k + da - db] - lca * b[k];
    if (univ_deg(a) >= da && univ_deg(a) >= 0)
      fail(Errc::Internal, "pseudo-remainder did not reduce degree");
  }
  return a;
}

int highest_var(const Series& f, const Series& g) {
  for (int v = f.ring().nvars() - 1; v >= 0; --v)
    if (f.occurs(v) || g.occurs(v)) return v;
  return -1;
}

} // namespace

Series normalize_leading(const Series& f) {
  require_exact(f, "normalize_leading");
  if (f.is_zero()) return f;
  const NumberField& F = f.ring().field();
  const FieldElement& lead = f.terms().rbegin()->second;
  return f.scaled(F.inv(lead));
}

std::optional<Series> exact_divide(const Series& f, const Series& g) {
  require_exact(f, "exact_divide");
  require_exact(g, "exact_divide");
  if (g.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  const Ring& R = f.ring();
  if (!(R == g.ring())) fail(Errc::RingMismatch, "polynomials from different rings");
  const NumberField& F = R.field();
  Series q(R);
  Series r = f;
  const auto& gt = *g.terms().rbegin();
  while (!r.is_zero()) {
    const auto& rt = *r.terms().rbegin();
    ExpVec e(rt.first.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = rt.first[i] - gt.first[i];
      if (e[i] < 0) return std::nullopt;
    }
    FieldElement c = F.div(rt.second, gt.second);
    Series mono = Series::monomial(R, e, c);
    q = q + mono;
    r = r - mono * g;
  }
  return q;
}

namespace {

std::pair<Series, Series> content_pp(const Series& f, int v) {
  std::vector<Series> c = to_univariate(f, v);
  Series cont(f.ring());
  for (const auto& s : c) cont = poly_gcd(cont, s);
  if (cont.is_zero()) return {cont, f};
  auto pp = exact_divide(f, cont);
  if (!pp) fail(Errc::Internal, "content does not divide its polynomial");
  return {cont, *pp};
}

} // namespace

Series poly_gcd(const Series& f, const Series& g) {
  require_exact(f, "poly_gcd");
  require_exact(g, "poly_gcd");
  if (!(f.ring() == g.ring())) fail(Errc::RingMismatch, "polynomials from different rings");
  if (f.is_zero()) return normalize_leading(g);
  if (g.is_zero()) return normalize_leading(f);
  int v = highest_var(f, g);
  if (v < 0) return Series::constant(f.ring(), f.ring().field().one());

  std::vector<Series> fu = to_univariate(f, v);
  std::vector<Series> gu = to_univariate(g, v);
  if (coeffs_all_constant(fu) && coeffs_all_constant(gu)) {
    if (univ_deg(fu) < univ_deg(gu)) std::swap(fu, gu);
    return monic_euclid(std::move(fu), std::move(gu), v);
  }

  auto [cf, pf] = content_pp(f, v);
  auto [cg, pg] = content_pp(g, v);
  Series c = poly_gcd(cf, cg);

  std::vector<Series> a = to_univariate(pf, v);
  std::vector<Series> b = to_univariate(pg, v);
  if (univ_deg(a) < univ_deg(b)) std::swap(a, b);
  Series gcd_pp(f.ring());
  while (true) {
    if (univ_deg(b) < 0) {
      gcd_pp = normalize_leading(from_univariate(a, v));
      break;
    }
    if (univ_deg(b) == 0) {
      gcd_pp = Series::constant(f.ring(), f.ring().field().one());
      break;
    }
    std::vector<Series> r = pseudo_rem(a, b, v);
    Series rp = from_univariate(r, v);
    if (!rp.is_zero()) {
      auto [cr, prp] = content_pp(rp, v);
      rp = normalize_leading(prp);
    }
    a = std::move(b);
    b = to_univariate(rp, v);
  }
  return normalize_leading(c * gcd_pp);
}

Series poly_lcm(const Series& f, const Series& g) {
  require_exact(f, "poly_lcm");
  require_exact(g, "poly_lcm");
  if (f.is_zero() || g.is_zero()) return Series(f.ring());
  Series d = poly_gcd(f, g);
  auto q = exact_divide(f * g, d);
  if (!q) fail(Errc::Internal, "gcd does not divide the product");
  return normalize_leading(*q);
}

Series content_wrt_vars(const Series& f, const std::vector<int>& vars) {
  require_exact(f, "content_wrt_vars");
  const Ring& R = f.ring();
  std::vector<bool> in_vars(R.nvars(), false);
  for (int v : vars) in_vars.at(v) = true;

  std::map<ExpVec, Series, GradedLexLess> groups;
  for (const auto& [e, c] : f.terms()) {
    ExpVec outer(e.size(), 0), inner = e;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (in_vars[i]) {
        outer[i] = e[i];
        inner[i] = 0;
      }
    auto [it, inserted] = groups.emplace(outer, Series(R));
    it->second.add_term(inner, c);
  }
  Series cont(R);
  for (const auto& [e, coeff] : groups) cont = poly_gcd(cont, coeff);
  return cont;
}

} // namespace germkit
