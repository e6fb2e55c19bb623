// End-to-end kernels: preparation, Hankel discriminants, towers and the
// denominator extraction on the reference branches.

#include <benchmark/benchmark.h>

#include "germkit/eisenstein.hpp"
#include "germkit/expr.hpp"
#include "germkit/tower.hpp"

using namespace germkit;

namespace {

void BM_Prepare(benchmark::State& state) {
  Ring R({"x1", "x2", "x3"}, NumberField());
  Series F = parse_expr(
      "(1 + x1 - 2*x2 + x3)*(x3^3 - x1*x3 + x2^2 - 2*x1^3 + x1*x2*x3)", R);
  int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prepare(F, 2, D));
}
BENCHMARK(BM_Prepare)->Arg(8)->Arg(12)->Arg(16);

void BM_GenDisc(benchmark::State& state) {
  Ring R({"x1", "x2", "x"}, NumberField());
  int p = static_cast<int>(state.range(0));
  WeierstrassPoly W{R, 2, p, {}};
  for (int j = 1; j <= p; ++j)
    W.coeffs.push_back(parse_expr("x1^" + std::to_string(j) + " - x2", R));
  for (auto _ : state)
    for (int j = 1; j <= p; ++j) benchmark::DoNotOptimize(gen_disc(W, j));
}
BENCHMARK(BM_GenDisc)->Arg(3)->Arg(4)->Arg(5);

void BM_SetTowerCusp(benchmark::State& state) {
  Ring R({"x1", "x2"}, NumberField());
  InputGerm germ{GermKind::Set, R, {parse_expr("x2^2 - x1^3 + x1*x2^2", R)},
                 static_cast<int>(state.range(0)), 16};
  for (auto _ : state) benchmark::DoNotOptimize(build_set_tower(germ));
}
BENCHMARK(BM_SetTowerCusp)->Arg(12)->Arg(16);

void BM_EisensteinGeometric(benchmark::State& state) {
  auto [work, tring] = make_eisenstein_rings({"t"}, {"x"}, "y", NumberField());
  std::map<ExpVec, RationalFunction, GradedLexLess> seed;
  seed.emplace(ExpVec{0}, RationalFunction(parse_expr("1", tring)));
  seed.emplace(ExpVec{1}, RationalFunction(parse_expr("1", tring), parse_expr("t", tring)));
  BranchSeed bs = make_branch_seed(work, tring, 1, 1, parse_expr("(t-x)*y - t", work),
                                   std::move(seed), 1);
  int out = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eisenstein_extract(bs, out));
}
BENCHMARK(BM_EisensteinGeometric)->Arg(6)->Arg(10)->Arg(14);

} // namespace

BENCHMARK_MAIN();
