#include <benchmark/benchmark.h>

#include <cstdint>

#include <staircount/engine.hpp>
#include <staircount/oracle.hpp>
#include <staircount/series.hpp>
#include <staircount/step_set.hpp>

using namespace staircount;

namespace {

void BM_partition_series_all_unbounded(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto series = partition_series(StepSetSpec::all(), Cap::unbounded(), order);
    benchmark::DoNotOptimize(series);
  }
}
BENCHMARK(BM_partition_series_all_unbounded)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000);

void BM_partition_series_all_cap2(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto series = partition_series(StepSetSpec::all(), Cap::finite(2), order);
    benchmark::DoNotOptimize(series);
  }
}
BENCHMARK(BM_partition_series_all_cap2)->Arg(250)->Arg(1000)->Arg(2000);

void BM_partition_series_primes(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto series = partition_series(StepSetSpec::primes(), Cap::unbounded(), order);
    benchmark::DoNotOptimize(series);
  }
}
BENCHMARK(BM_partition_series_primes)->Arg(1000)->Arg(2000);

// The generic convolution route the in-place updates replace; same product,
// one generic mul per factor.
void BM_naive_product_all_unbounded(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    TruncatedSeries acc = TruncatedSeries::one(order);
    for (std::uint64_t s = 1; s <= order; ++s) {
      TruncatedSeries factor(order);
      std::vector<mpz_class> coeffs(order + 1);
      for (std::size_t i = 0; i <= order; i += s) coeffs[i] = 1;
      acc = acc * TruncatedSeries::from_coefficients(std::move(coeffs));
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_naive_product_all_unbounded)->Arg(64)->Arg(128)->Arg(256);

void BM_composition_recurrence(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto count = count_compositions(StepSetSpec::all(), Cap::unbounded(), n);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_composition_recurrence)->Arg(256)->Arg(1024);

void BM_capped_compositions(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto count = count_compositions(StepSetSpec::all(), Cap::finite(2), n);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_capped_compositions)->Arg(20)->Arg(40);

void BM_oracle_partitions(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto count = oracle::count_partitions(StepSetSpec::all(), Cap::unbounded(), n);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_oracle_partitions)->Arg(20)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
