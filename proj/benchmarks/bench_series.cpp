// Polynomial-kernel microbenchmarks: sparse multiplication and composition
// at the sizes the tower and extraction pipelines actually hit.

#include <benchmark/benchmark.h>

#include <random>

#include "germkit/expr.hpp"
#include "germkit/series.hpp"

using namespace germkit;

namespace {

Series random_poly(std::mt19937& rng, const Ring& R, int max_degree, int terms) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  Series s(R);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(R.nvars(), 0);
    int budget = deg(rng);
    for (int v = 0; v < R.nvars() && budget > 0; ++v) {
      std::uniform_int_distribution<int> part(0, budget);
      e[v] = part(rng);
      budget -= e[v];
    }
    s.add_term(e, R.field().from_rational(rat(num(rng), den(rng))));
  }
  return s;
}

void BM_SparseMulExact(benchmark::State& state) {
  std::mt19937 rng(7);
  Ring R({"x1", "x2", "x3"}, NumberField());
  Series f = random_poly(rng, R, static_cast<int>(state.range(0)), 60);
  Series g = random_poly(rng, R, static_cast<int>(state.range(0)), 60);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_SparseMulExact)->Arg(6)->Arg(10)->Arg(14);

void BM_SparseMulTruncated(benchmark::State& state) {
  std::mt19937 rng(7);
  Ring R({"x1", "x2", "x3"}, NumberField());
  int D = static_cast<int>(state.range(0));
  Series f = random_poly(rng, R, D, 80).with_trunc(Trunc::at(D));
  Series g = random_poly(rng, R, D, 80).with_trunc(Trunc::at(D));
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_SparseMulTruncated)->Arg(8)->Arg(12)->Arg(16);

void BM_ComposeShear(benchmark::State& state) {
  std::mt19937 rng(9);
  Ring R({"x1", "x2", "x3"}, NumberField());
  Series f = random_poly(rng, R, 10, 80);
  std::vector<std::vector<long>> M{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(linear_change(f, M));
}
BENCHMARK(BM_ComposeShear);

void BM_InverseUnit(benchmark::State& state) {
  Ring R({"x1", "x2"}, NumberField());
  Series u = parse_expr("1 + x1 - 2*x2 + 3*x1*x2 - x2^2", R);
  int D = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(inverse_unit(u, D));
}
BENCHMARK(BM_InverseUnit)->Arg(8)->Arg(12)->Arg(16);

void BM_ExactFieldExtension(benchmark::State& state) {
  NumberField K("v", {rat(-2), rat(0), rat(1)});
  Ring R({"x1", "x2"}, K);
  std::mt19937 rng(11);
  Series f = random_poly(rng, R, 8, 50);
  Series g = random_poly(rng, R, 8, 50);
  for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_ExactFieldExtension);

} // namespace
