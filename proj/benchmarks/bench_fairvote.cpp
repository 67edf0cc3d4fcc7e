// Microbenchmarks for the hot paths: dense table sweeps, upward closure,
// construction, enumeration and the symmetry search.

#include <benchmark/benchmark.h>

#include "fairvote/construct.hpp"
#include "fairvote/counts.hpp"
#include "fairvote/enumerate.hpp"
#include "fairvote/indices.hpp"
#include "fairvote/rule.hpp"
#include "fairvote/symmetry.hpp"

namespace {

using namespace fairvote;

void BM_UpwardClosure_Majority(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  VotingRule majority = majority_rule(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(upward_closure(n, majority.mwc_list()));
  }
}
BENCHMARK(BM_UpwardClosure_Majority)->Arg(15)->Arg(19);

void BM_Validate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  VotingRule dense = majority_rule(n).materialized();
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate(dense));
  }
}
BENCHMARK(BM_Validate)->Arg(15)->Arg(19);

void BM_WinningCounts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  VotingRule dense = majority_rule(n).materialized();
  for (auto _ : state) {
    benchmark::DoNotOptimize(winning_counts(dense));
  }
}
BENCHMARK(BM_WinningCounts)->Arg(15)->Arg(19);

void BM_PivotalCounts(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  VotingRule dense = majority_rule(n).materialized();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pivotal_counts(dense));
  }
}
BENCHMARK(BM_PivotalCounts)->Arg(15)->Arg(19);

void BM_ShapleyShubik_HalfFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  VotingRule rule = unbiased_rule(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shapley_shubik(rule, IndexMethod::WinningCounts));
  }
}
BENCHMARK(BM_ShapleyShubik_HalfFamily)->Arg(14)->Arg(18);

void BM_ConstructUnbiased(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(unbiased_rule(n));
  }
}
BENCHMARK(BM_ConstructUnbiased)->Arg(12)->Arg(18);

void BM_EnumerateRules(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::uint64_t count = 0;
    enumerate_rules(n, [&](const VotingRule&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateRules)->Arg(4)->Arg(5)->Arg(6);

void BM_EquitabilitySearch(benchmark::State& state) {
  VotingRule prism = example_rule(ExampleRule::Prism);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_equitable(prism));
  }
}
BENCHMARK(BM_EquitabilitySearch);

}  // namespace

BENCHMARK_MAIN();
