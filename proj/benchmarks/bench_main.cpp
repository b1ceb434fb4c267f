#include <benchmark/benchmark.h>

#include <complex>

#include "dimerwind/enumeration.hpp"
#include "dimerwind/honeycomb.hpp"
#include "dimerwind/kasteleyn.hpp"
#include "dimerwind/spectral.hpp"
#include "dimerwind/theta.hpp"

namespace {

using namespace dimerwind;

void BM_build_graph(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(TorusGraph::build(m, 3 * m));
  }
}
BENCHMARK(BM_build_graph)->Arg(4)->Arg(16)->Arg(64);

void BM_enumerate(benchmark::State& state) {
  const auto g = TorusGraph::build(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_matchings(g));
  }
}
BENCHMARK(BM_enumerate)->Arg(1)->Arg(2)->Arg(3);

void BM_partition_double(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto p = Perturbation<double>::make(Cx<double>(0.3), Cx<double>(-0.2), k, 3 * k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition(p));
  }
}
BENCHMARK(BM_partition_double)->Arg(4)->Arg(16)->Arg(64);

void BM_extract_counts(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(extract_winding_counts(k, 3 * k));
  }
}
BENCHMARK(BM_extract_counts)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_theta_series(benchmark::State& state) {
  const Nome nome = Nome::from_q(0.9);
  const std::complex<double> zeta(0.31, 0.22);
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta(3, zeta, nome));
  }
}
BENCHMARK(BM_theta_series);

void BM_roots(benchmark::State& state) {
  const std::complex<double> phi(1.234, 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(roots(phi));
  }
}
BENCHMARK(BM_roots);

void BM_free_energy_1d(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(free_energy(FreeEnergyMethod::log_r1_integral, 1e-10));
  }
}
BENCHMARK(BM_free_energy_1d)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
