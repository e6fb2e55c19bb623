// Acceptance suite: one pass/fail line per criterion, every bound pinned in
// code. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "germkit/descent.hpp"
#include "germkit/eisenstein.hpp"
#include "germkit/expr.hpp"
#include "germkit/json_io.hpp"
#include "germkit/tower.hpp"

using namespace germkit;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string note;
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_seconds) {
    ok = false;
    note += (note.empty() ? "" : "; ") + std::string("time budget exceeded");
  }
  std::printf("[%s] criterion %d: %s (%.2f s / %.0f s)%s%s\n", ok ? "PASS" : "FAIL",
              number, what.c_str(), secs, budget_seconds, note.empty() ? "" : " -- ",
              note.c_str());
  if (!ok) ++failures;
}

Rational rnd_rat(std::mt19937& rng, int bound = 6) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 4);
  return rat(num(rng), den(rng));
}

WeierstrassPoly monic_from_roots(const Ring& R, const std::vector<FieldElement>& roots) {
  const NumberField& F = R.field();
  int p = static_cast<int>(roots.size());
  std::vector<FieldElement> e(p + 1, F.zero());
  e[0] = F.one();
  for (int i = 0; i < p; ++i)
    for (int j = std::min(i + 1, p); j >= 1; --j)
      e[j] = F.add(e[j], F.mul(roots[i], e[j - 1]));
  WeierstrassPoly W{R, 0, p, {}};
  for (int j = 1; j <= p; ++j)
    W.coeffs.push_back(Series::constant(R, (j % 2 == 1) ? F.neg(e[j]) : e[j]));
  return W;
}

struct SeedSpec {
  ExpVec alpha;
  std::string num;
  std::string den = "1";
};

BranchSeed seed_of(const std::vector<std::string>& tvars,
                   const std::vector<std::string>& xvars, const std::string& P,
                   const std::vector<SeedSpec>& entries, int seed_degree) {
  auto [work, tring] = make_eisenstein_rings(tvars, xvars, "y", NumberField());
  std::map<ExpVec, RationalFunction, GradedLexLess> seed;
  for (const auto& s : entries)
    seed.emplace(s.alpha,
                 RationalFunction(parse_expr(s.num, tring), parse_expr(s.den, tring)));
  return make_branch_seed(work, tring, static_cast<int>(tvars.size()),
                          static_cast<int>(xvars.size()), parse_expr(P, work),
                          std::move(seed), seed_degree);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

int main() {
  // 1. generalized-discriminant oracle equivalence
  criterion(1, "gen_disc equals the root-side oracle on 200 random multisets", 10.0,
            [](std::string& note) {
              std::mt19937 rng(101);
              Ring R({"x"}, NumberField());
              const NumberField& Q = R.field();
              std::uniform_int_distribution<int> pd(1, 5);
              for (int it = 0; it < 200; ++it) {
                int p = pd(rng);
                std::vector<FieldElement> roots;
                std::uniform_int_distribution<int> pick(0, 2);
                std::vector<FieldElement> pool;
                for (int i = 0; i < 3; ++i) pool.push_back(Q.from_rational(rnd_rat(rng)));
                for (int i = 0; i < p; ++i) roots.push_back(pool[pick(rng)]);
                WeierstrassPoly W = monic_from_roots(R, roots);
                for (int j = 1; j <= p; ++j) {
                  Series d = gen_disc(W, j);
                  if (!(d.coeff(ExpVec{0}) == oracle_disc(roots, j, Q))) {
                    note = "mismatch at iteration " + std::to_string(it);
                    return false;
                  }
                }
              }
              return true;
            });

  // 2. classical discriminant against the resultant
  criterion(2, "Delta_1 matches resultant(W, W') up to (-1)^{p(p-1)/2} on 50 samples", 5.0,
            [](std::string& note) {
              std::mt19937 rng(202);
              Ring R({"x"}, NumberField());
              std::uniform_int_distribution<int> pd(1, 4);
              for (int it = 0; it < 50; ++it) {
                int p = pd(rng);
                WeierstrassPoly W{R, 0, p, {}};
                for (int j = 0; j < p; ++j)
                  W.coeffs.push_back(Series::constant(R, rnd_rat(rng)));
                Series lhs = gen_disc(W, 1);
                Series res = resultant_with_derivative(W);
                int sign = (p * (p - 1) / 2) % 2 == 0 ? 1 : -1;
                if (!(lhs == (sign > 0 ? res : -res))) {
                  note = "sign/value mismatch at iteration " + std::to_string(it);
                  return false;
                }
              }
              return true;
            });

  // 3. Weierstrass preparation identity + idempotence + unit invariance
  criterion(3, "preparation identity/idempotence/unit-invariance on 100 random inputs", 60.0,
            [](std::string& note) {
              std::mt19937 rng(303);
              const int D = 12;
              int done = 0;
              while (done < 100) {
                int n = 2 + (done % 2); // n <= 3
                std::vector<std::string> names;
                for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
                Ring R(names, NumberField());
                std::uniform_int_distribution<int> pd(1, 4), cd(1, 5), td(0, 4);
                int p = pd(rng);
                Series F = Series::monomial(R, [&] {
                  ExpVec e(n, 0);
                  e[n - 1] = p;
                  return e;
                }(), R.field().from_rational(rat(cd(rng))));
                for (int t = 0; t < 6; ++t) {
                  ExpVec e(n, 0);
                  int budget = td(rng);
                  for (int v = 0; v < n && budget > 0; ++v) {
                    std::uniform_int_distribution<int> part(0, budget);
                    e[v] = part(rng);
                    budget -= e[v];
                  }
                  bool pure = true;
                  for (int v = 0; v + 1 < n; ++v)
                    if (e[v] != 0) pure = false;
                  if (pure && e[n - 1] <= p) continue;
                  F.add_term(e, R.field().from_rational(rnd_rat(rng)));
                }
                auto reg = regularity_order(F, n - 1);
                if (!reg || *reg != p) continue;
                ++done;

                PreparationResult pr = prepare(F, n - 1, D);
                if (pr.valid_to != D - p ||
                    !agree_up_to(pr.unit * pr.poly.as_series(), F, pr.valid_to)) {
                  note = "identity failed";
                  return false;
                }
                PreparationResult again = prepare(pr.poly.as_series(), n - 1, D);
                if (!agree_up_to(again.poly.as_series(), pr.poly.as_series(),
                                 again.valid_to) ||
                    !agree_up_to(again.unit,
                                 Series::constant(R, R.field().one()), again.valid_to)) {
                  note = "idempotence failed";
                  return false;
                }
                Series u = parse_expr("1 + x1 + 2*x2", R);
                PreparationResult scaled = prepare(u * F, n - 1, D);
                if (!agree_up_to(scaled.poly.as_series(), pr.poly.as_series(),
                                 std::min(pr.valid_to, scaled.valid_to))) {
                  note = "unit invariance failed";
                  return false;
                }
              }
              return true;
            });

  // 4. set towers end to end
  criterion(4, "cusp and transverse-lines set towers produce the pinned stage data", 10.0,
            [](std::string& note) {
              Ring R({"x1", "x2"}, NumberField());
              InputGerm cusp{GermKind::Set, R, {parse_expr("x2^2-x1^3", R)}, 12, 16};
              Tower t = build_set_tower(cusp);
              if (t.stages.size() != 3 || t.stages[1].disc->j != 1 ||
                  !(t.stages[1].unit == parse_expr("4", R)) ||
                  !(t.stages[1].f.as_series() == parse_expr("x1^3", R)) ||
                  !(t.stages[2].unit == parse_expr("3", R))) {
                note = "cusp stage data mismatch";
                return false;
              }
              if (!verify_tower(t, cusp).ok) {
                note = "cusp verification failed";
                return false;
              }
              InputGerm lines{GermKind::Set, R, {parse_expr("x2^2-x1^2", R)}, 12, 16};
              Tower t2 = build_set_tower(lines);
              if (!(t2.stages[1].f.as_series() == parse_expr("x1^2", R)) ||
                  t2.stages[2].disc->j != 2 ||
                  !(t2.stages[2].unit == parse_expr("2", R))) {
                note = "lines stage data mismatch";
                return false;
              }
              if (!verify_tower(t2, lines).ok) {
                note = "lines verification failed";
                return false;
              }
              return true;
            });

  // 5. function tower end to end
  criterion(5, "function tower of g = x2^2 yields f_2 = x2^2 - x1, q_1 = 1, p_1 = 0", 5.0,
            [](std::string& note) {
              Ring R({"x1", "x2"}, NumberField());
              InputGerm germ{GermKind::Function, R, {parse_expr("x2^2", R)}, 12, 16};
              Tower t = build_function_tower(germ);
              if (t.stages.size() != 2 ||
                  !(t.stages[0].f.as_series() == parse_expr("x2^2-x1", R)) ||
                  !(t.stages[0].unit == parse_expr("-1", R)) ||
                  !(t.stages[1].disc->delta == parse_expr("4*x1", R)) ||
                  t.stages[1].q != 1 || t.stages[1].f.degree != 0) {
                note = "stage data mismatch";
                return false;
              }
              if (!verify_tower(t, germ).ok) {
                note = "reconstruction failed";
                return false;
              }
              return true;
            });

  // 6 and 7 share the three reference extractions
  std::vector<BranchSeed> seeds;
  seeds.push_back(seed_of({"t"}, {"x"}, "(t-x)*y - t",
                          {{{0}, "1"}, {{1}, "1", "t"}, {{2}, "1", "t^2"}, {{3}, "1", "t^3"}},
                          3));
  seeds.push_back(seed_of({"t"}, {"x"}, "y^2 - 1 - t*x",
                          {{{0}, "1"}, {{1}, "t", "2"}, {{2}, "0-t^2", "8"}, {{3}, "t^3", "16"}},
                          3));
  seeds.push_back(seed_of({"t"}, {"x"}, "y^2 - x^2*(1+t*x)",
                          {{{1}, "1"}, {{2}, "t", "2"}, {{3}, "0-t^2", "8"}}, 3));
  std::vector<EisensteinResult> results;

  criterion(6, "extraction matches the independent Q(t) expansion to degree 8", 120.0,
            [&](std::string& note) {
              for (std::size_t i = 0; i < seeds.size(); ++i) {
                // extraction enforces the Hensel residual mod u'^9 and the
                // R^2 divisibility witness internally; it throws otherwise
                EisensteinResult res = eisenstein_extract(seeds[i], 8);
                EisensteinReport rep = verify_eisenstein(res, seeds[i], 8);
                if (!rep.ok) {
                  note = "oracle mismatch on input " + std::to_string(i) +
                         (rep.mismatches.empty() ? "" : ": " + rep.mismatches.front());
                  return false;
                }
                results.push_back(std::move(res));
              }
              return true;
            });

  criterion(7, "denominator law: r^{2|a|-1} f_a is polynomial in every run", 10.0,
            [&](std::string& note) {
              if (results.size() != seeds.size()) {
                note = "criterion 6 did not produce results";
                return false;
              }
              for (const auto& res : results) {
                RationalFunction rRF{res.r};
                for (const auto& [alpha, num] : res.numerators) {
                  int k = total_degree(alpha);
                  // f_alpha of the b-cleared series as a rational function
                  RationalFunction f_alpha =
                      k == 0 ? RationalFunction(num * res.r,
                                                Series::constant(res.tring, rat(1)))
                             : RationalFunction(num, res.r.pow(2 * k - 1));
                  RationalFunction scaled = f_alpha;
                  for (int i = 0; i < 2 * k - 1; ++i) scaled = scaled * rRF;
                  if (k == 0) scaled = scaled / rRF;
                  if (!scaled.is_polynomial()) {
                    note = "non-polynomial numerator at |alpha| = " + std::to_string(k);
                    return false;
                  }
                }
              }
              return true;
            });

  // 8. branch expansion
  criterion(8, "branch of v^2 - t at q = 1 has coefficients 1, 1/2, -1/8, 1/16", 2.0,
            [](std::string& note) {
              Ring R({"t", "v"}, NumberField());
              NumberField Q;
              BranchPoint bp{R, 1, parse_expr("v^2 - t", R), {rat(1)}, Q,
                             Q.from_rational(rat(1)), 12};
              Series w = branch_taylor(bp); // residual mod s^13 enforced inside
              std::vector<Rational> expect{rat(1), rat(1, 2), rat(-1, 8), rat(1, 16)};
              for (int k = 0; k <= 3; ++k)
                if (!(w.coeff(ExpVec{k}) == Q.from_rational(expect[k]))) {
                  note = "coefficient mismatch at order " + std::to_string(k);
                  return false;
                }
              return true;
            });

  // 9. descent
  criterion(9, "sqrt(2) descent reassembles and passes the Vandermonde check", 2.0,
            [](std::string& note) {
              NumberField K("v", {rat(-2), rat(0), rat(1)});
              Ring R({"x"}, K);
              Series f(R);
              for (int k = 0; k <= 6; ++k)
                f.add_term(ExpVec{k}, K.add(K.gen(), K.from_rational(rat(k * k, k + 1))));
              DescentResult res = basis_decompose(f);
              if (!(descent_reassemble(res, R) == f)) {
                note = "reassembly failed";
                return false;
              }
              auto ok = vandermonde_verify(res, f);
              if (!ok || !*ok) {
                note = "Vandermonde check failed";
                return false;
              }
              DescentResult bad = res;
              bad.components[0] =
                  bad.components[0] + parse_expr("x^2", bad.rational_ring);
              auto nok = vandermonde_verify(bad, f);
              if (!nok || *nok) {
                note = "negative control not detected";
                return false;
              }
              return true;
            });

  // 10. CLI corpus determinism + roundtrip
  criterion(10, "every corpus job is byte-deterministic and round trips", 120.0,
            [](std::string& note) {
#if !defined(GERMKIT_CLI_PATH)
              note = "CLI not built";
              return false;
#else
              const std::string cli = GERMKIT_CLI_PATH;
              const std::string corpus = GERMKIT_CORPUS_DIR;
              struct JobSpec {
                std::string cmd, file;
              };
              std::vector<JobSpec> jobs = {
                  {"tower-set", "set_cusp"},    {"tower-set", "set_lines"},
                  {"tower-set", "set_smooth"},  {"tower-fn", "fn_square"},
                  {"tower-fn", "fn_linear"},    {"tower-fn", "fn_pair"},
                  {"eisenstein", "eis_geometric"}, {"eisenstein", "eis_sqrt"},
                  {"eisenstein", "eis_esqrt"},  {"descent", "descent_sqrt2"},
                  {"branch", "branch_sqrt"},    {"prepare", "prepare_cusp"},
                  {"disc", "disc_cusp"},
              };
              for (const auto& job : jobs) {
                std::string a = "acc_" + job.file + "_a.json";
                std::string b = "acc_" + job.file + "_b.json";
                for (const std::string& out : {a, b}) {
                  std::string cmd = cli + " " + job.cmd + " --input " + corpus + "/" +
                                    job.file + ".json --output " + out + " >/dev/null 2>&1";
                  if (WEXITSTATUS(std::system(cmd.c_str())) != 0) {
                    note = job.file + " exited nonzero";
                    return false;
                  }
                }
                if (slurp(a) != slurp(b) || slurp(a).empty()) {
                  note = job.file + " output not deterministic";
                  return false;
                }
                std::string rt = "acc_" + job.file + "_rt.json";
                std::string cmd = cli + " roundtrip --input " + a + " > " + rt +
                                  " 2>/dev/null";
                if (WEXITSTATUS(std::system(cmd.c_str())) != 0 ||
                    slurp(rt).find("\"roundtrip\": true") == std::string::npos) {
                  note = job.file + " failed roundtrip";
                  return false;
                }
              }
              return true;
#endif
            });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
