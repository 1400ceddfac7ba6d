// Serial reference vs OpenMP for the enumeration-heavy sums.
#include <benchmark/benchmark.h>

#include "dnjt/folding.hpp"
#include "dnjt/tableaux.hpp"

using namespace dnjt;

namespace {

const char* kShapes[] = {"3,2,1", "3,3/1", "3,3,2/1"};

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& s)
{
  s.SetLabel(std::string(kShapes[s.range(0)]) + (s.range(1) ? " omp" : " serial"));
}

void BM_FirstSum(benchmark::State& s)
{
  auto d = parse_skew(kShapes[s.range(0)]);
  for (auto _ : s) benchmark::DoNotOptimize(tuple_sum(d, 3, TupleMode::p1, true, exec_of(s)));
  label(s);
}

void BM_PositiveSum(benchmark::State& s)
{
  auto d = parse_skew(kShapes[s.range(0)]);
  for (auto _ : s) benchmark::DoNotOptimize(positive_sum_P2(d, 3, exec_of(s)));
  label(s);
}

void BM_ThirdSum(benchmark::State& s)
{
  auto d = parse_skew(kShapes[s.range(0)]);
  for (auto _ : s) benchmark::DoNotOptimize(third_sum(d, 3, exec_of(s)));
  label(s);
}

void BM_TableauSum(benchmark::State& s)
{
  auto d = parse_skew(kShapes[s.range(0)]);
  for (auto _ : s) benchmark::DoNotOptimize(tableau_sum(d, 3, TabRule::lu, exec_of(s)));
  label(s);
}

}  // namespace

BENCHMARK(BM_FirstSum)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PositiveSum)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThirdSum)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableauSum)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
