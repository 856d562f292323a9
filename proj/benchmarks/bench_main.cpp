// Throughput of the main enumerators and law checkers.

#include <benchmark/benchmark.h>

#include "skewcat/action.hpp"
#include "skewcat/harness.hpp"
#include "skewcat/instances/gms.hpp"
#include "skewcat/instances/lattice.hpp"
#include "skewcat/instances/matcat.hpp"

using namespace skewcat;

static void enumerate_two_point_spaces(benchmark::State& state) {
  auto grid = default_grid();
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_gms(2, grid));
  }
}
BENCHMARK(enumerate_two_point_spaces);

static void enumerate_monoid_actions(benchmark::State& state) {
  auto const order = static_cast<std::size_t>(state.range(0));
  auto       ms    = enumerate_monoids(order);
  for (auto _ : state) {
    std::size_t n = 0;
    for (auto const& x : ms) {
      for (auto const& c : ms) {
        n += enumerate_actions(x, c).size();
      }
    }
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(enumerate_monoid_actions)->Arg(2)->Arg(3);

static void matrix_composition(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  matcat     m;
  auto       f = mat::scaled(m.identity(n), rational(3, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.compose(f, f));
  }
}
BENCHMARK(matrix_composition)->Arg(4)->Arg(16);

static void monoid_oracle_suite(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(monoid_oracle(static_cast<std::size_t>(state.range(0)), budget{}));
  }
}
BENCHMARK(monoid_oracle_suite)->Arg(2)->Unit(benchmark::kMillisecond);

static void left_closed_copower_suite(benchmark::State& state) {
  auto l = diamond_lattice();
  for (auto _ : state) {
    benchmark::DoNotOptimize(left_closed_copower(l, 2, budget{}));
  }
}
BENCHMARK(left_closed_copower_suite)->Unit(benchmark::kMillisecond);

static void invertibility_truth_values_suite(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(invertibility_truth_values(budget{}));
  }
}
BENCHMARK(invertibility_truth_values_suite)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
