#include <benchmark/benchmark.h>

#include "arithmirror/datasets.hpp"
#include "arithmirror/pencil.hpp"
#include "arithmirror/pfode.hpp"

using namespace arithmirror;

namespace {

void BM_CountTable(benchmark::State& state) {
  const auto pencil = build_pencil(*builtin_polytope("poly4283"));
  const auto field = FiniteField::make(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_table(pencil, field, "4283"));
  state.SetLabel("p=" + std::to_string(state.range(0)));
}
BENCHMARK(BM_CountTable)->Arg(5)->Arg(11)->Arg(31)->Unit(benchmark::kMillisecond);

void BM_CoxOracle(benchmark::State& state) {
  const auto pencil = build_pencil(*builtin_polytope("p3"));
  const auto field = FiniteField::make(7);
  for (auto _ : state) benchmark::DoNotOptimize(count_points_cox_oracle(pencil, field, 3));
}
BENCHMARK(BM_CoxOracle)->Unit(benchmark::kMillisecond);

void BM_ConstantTerms(benchmark::State& state) {
  const auto dual = polar_dual(*builtin_polytope("poly433"));
  for (auto _ : state)
    benchmark::DoNotOptimize(constant_terms(dual.vertices(), static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ConstantTerms)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_RecoverOperator(benchmark::State& state) {
  const auto series = period_series(*builtin_polytope("poly10"), 30);
  for (auto _ : state) benchmark::DoNotOptimize(recover_operator(series, 3, 4));
}
BENCHMARK(BM_RecoverOperator)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
