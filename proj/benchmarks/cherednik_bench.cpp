#include <benchmark/benchmark.h>

#include "cherednik/cherednik.hpp"
#include "cherednik/lowest_weight.hpp"
#include "cherednik/multipartition.hpp"

using namespace cherednik;

static void BM_CycloMul(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  CycloNumber a(m), b(m);
  for (int k = 0; k < m; ++k) {
    a += zeta_pow(m, k) * make_rational(k + 1, 7);
    b += zeta_pow(m, 2 * k + 1) * make_rational(3 - k, 5);
  }
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMul)->Arg(3)->Arg(4)->Arg(9)->Arg(12);

static void BM_CycloInverse(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const CycloNumber a = zeta_pow(m, 1) + CycloNumber(m, 3L) - zeta_pow(m, 2) * make_rational(2, 9);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CycloInverse)->Arg(4)->Arg(9);

// Dunkl images of every monomial of one degree, cache cleared each round.
static void BM_DunklDegree(benchmark::State& state) {
  const auto g = GroupParams::make(4, 2, 3);
  const auto c = ParamSampler(1).next(g, Relation::main);
  const auto monos = monomials_of_degree(3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    DunklEngine e(g, c);
    for (auto mono : monos)
      for (int a = 0; a < 3; ++a) benchmark::DoNotOptimize(e.apply(a, mono));
  }
  state.counters["monomials"] = static_cast<double>(monos.size());
}
BENCHMARK(BM_DunklDegree)->Arg(4)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_SingularSpace(benchmark::State& state) {
  const auto g = GroupParams::make(9, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(find_singular_space(g, 1).space.dim());
}
BENCHMARK(BM_SingularSpace)->Unit(benchmark::kMillisecond);

static void BM_IdealDimension(benchmark::State& state) {
  const auto g = GroupParams::make(3, 1, 2);
  const auto gens = find_singular_space(g, 1).space.basis();
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ideal_dim_in_degree(gens, k));
}
BENCHMARK(BM_IdealDimension)->Arg(8)->Arg(10)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_Quotient(benchmark::State& state) {
  const auto g = GroupParams::make(4, 2, 2);
  const auto s = find_singular_space(g, 1);
  for (auto _ : state) benchmark::DoNotOptimize(build_quotient(s).total_dim());
}
BENCHMARK(BM_Quotient)->Unit(benchmark::kMillisecond);

static void BM_Kleshchev(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0)), p = static_cast<int>(state.range(1)), n = static_cast<int>(state.range(2));
  const auto g = GroupParams::make(m, p, n);
  const auto model = ResidueModel::symbolic(g, Relation::main);
  for (auto _ : state) benchmark::DoNotOptimize(hecke_simple_count(model));
}
BENCHMARK(BM_Kleshchev)->Args({4, 2, 3})->Args({9, 3, 2})->Args({6, 2, 4})->Unit(benchmark::kMillisecond);

static void BM_ConjugacyClasses(benchmark::State& state) {
  const auto g = GroupParams::make(4, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(g).size());
}
BENCHMARK(BM_ConjugacyClasses)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
