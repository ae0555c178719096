// Serial reference kernels against their OpenMP counterparts.

#include <bundlerev/buyer.hpp>
#include <bundlerev/continuous.hpp>
#include <bundlerev/examples.hpp>
#include <bundlerev/search.hpp>

#include <benchmark/benchmark.h>

#include <omp.h>

namespace {

using namespace bundlerev;

const JointDistribution& three_items() {
  static const auto d = examples::three_item_iid();
  return d;
}

void BM_SearchSerial(benchmark::State& state) {
  const auto g = candidate_grid(three_items(), GridMode::integer);
  for (auto _ : state)
    benchmark::DoNotOptimize(search_optimal_serial(three_items(), SearchConstraint::submodular, g).revenue);
}

void BM_SearchParallel(benchmark::State& state) {
  const auto g = candidate_grid(three_items(), GridMode::integer);
  for (auto _ : state)
    benchmark::DoNotOptimize(search_optimal(three_items(), SearchConstraint::submodular, g).revenue);
}

DiscreteF er_marginal(int points) {
  NumericParams p;
  p.grid_points = points;
  return DiscreteF::from(er_discretize(1, p));
}

void BM_BundleSweepSerial(benchmark::State& state) {
  const auto f = er_marginal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bundle_price_sweep_serial(f, f));
}

void BM_BundleSweepParallel(benchmark::State& state) {
  const auto f = er_marginal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bundle_price_sweep(f, f));
}

struct PairSetup {
  DiscreteF f = er_marginal(2001);
  std::vector<double> singles = capped_support_grid(f.values, 12);
  std::vector<double> bundles = capped_support_grid(f.values, 48);
};

void BM_PairSearchSerial(benchmark::State& state) {
  const PairSetup s;
  for (auto _ : state) benchmark::DoNotOptimize(search_pair_menus_serial(s.f, s.f, s.singles, s.singles, s.bundles).revenue);
}

void BM_PairSearchParallel(benchmark::State& state) {
  const PairSetup s;
  for (auto _ : state) benchmark::DoNotOptimize(search_pair_menus(s.f, s.f, s.singles, s.singles, s.bundles).revenue);
}

// check_monotone has no separate serial body; pin the team size instead.
void BM_CheckMonotone(benchmark::State& state) {
  const Menu m = examples::figure_submodular();
  const auto d = product({SingleItemDistribution::uniform({0, 20, 40, 60, 80, 100}),
                          SingleItemDistribution::uniform({0, 25, 50, 75, 100})});
  const auto grid = monotonicity_grid(m, d, ratio(1, 2));
  const int saved = omp_get_max_threads();
  omp_set_num_threads(state.range(0) == 0 ? saved : static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_monotone(m, grid).pairs_checked);
  omp_set_num_threads(saved);
  state.SetLabel(std::to_string(grid.size()) + " points");
}

BENCHMARK(BM_SearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BundleSweepSerial)->Arg(1001)->Arg(2001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BundleSweepParallel)->Arg(1001)->Arg(2001)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PairSearchSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PairSearchParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CheckMonotone)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
