#include <benchmark/benchmark.h>

#include "entmeter/mixed_bounds.hpp"
#include "entmeter/monotones.hpp"
#include "entmeter/named_states.hpp"
#include "entmeter/oracles.hpp"
#include "entmeter/random.hpp"
#include "entmeter/source_sim.hpp"
#include "entmeter/tensor.hpp"

using namespace entmeter;

namespace {

// Leg-local operator application on a 4-copy two-ququart register
// (dimension 65536), the largest state the shipped monotones touch.
void BM_ApplyToLegs16(benchmark::State& state) {
  Rng rng(1);
  const LegLayout layout =
      LegLayout::single_copy({{"A", 4}, {"B", 4}}).tensor_power(4);
  const StateVector psi = random_state(layout, rng);
  const Eigen::MatrixXcd op = haar_random_unitary(16, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_to_legs(op, {2, 5}, psi));
  }
}
BENCHMARK(BM_ApplyToLegs16);

void BM_GConcurrence4x4(benchmark::State& state) {
  Rng rng(2);
  const LegLayout layout = LegLayout::single_copy({{"A", 4}, {"B", 4}});
  const StateVector psi = random_state(layout, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_concurrence_4x4(psi));
  }
}
BENCHMARK(BM_GConcurrence4x4);

void BM_TanglePure(benchmark::State& state) {
  Rng rng(3);
  const LegLayout layout =
      LegLayout::single_copy({{"A", 2}, {"B", 2}, {"C", 2}});
  const StateVector psi = random_state(layout, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tangle_pure(psi));
  }
}
BENCHMARK(BM_TanglePure);

void BM_WoottersConcurrence(benchmark::State& state) {
  Rng rng(4);
  const LegLayout layout = LegLayout::single_copy({{"A", 2}, {"B", 2}});
  const DensityOperator rho = random_density(layout, 4, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wootters_concurrence(rho));
  }
}
BENCHMARK(BM_WoottersConcurrence);

void BM_ConcurrenceLowerBound(benchmark::State& state) {
  Rng rng(5);
  const LegLayout layout = LegLayout::single_copy({{"A", 2}, {"B", 2}});
  const DensityOperator rho = random_density(layout, 3, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence_lower_bound(rho));
  }
}
BENCHMARK(BM_ConcurrenceLowerBound);

void BM_SampleExpectation(benchmark::State& state) {
  Rng rng(6);
  const DensityOperator singlet = pure_density(singlet_state());
  const ObservableSpec v = v_operator(BoundConfig{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sample_expectation(v, {singlet, singlet}, state.range(0), rng));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleExpectation)->Arg(1000)->Arg(10000);

void BM_ConvexRoofSearch(benchmark::State& state) {
  Rng rng(7);
  const LegLayout layout = LegLayout::single_copy({{"A", 2}, {"B", 2}});
  const DensityOperator rho = random_density(layout, 2, rng);
  RoofSearchOptions options;
  options.iterations = 2000;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        convex_roof_search(rho, concurrence_pure, options, rng));
  }
}
BENCHMARK(BM_ConvexRoofSearch);

}  // namespace

BENCHMARK_MAIN();
