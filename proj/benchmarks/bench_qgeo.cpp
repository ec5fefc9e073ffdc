#include <benchmark/benchmark.h>

#include "qgeo/families.hpp"
#include "qgeo/lindblad.hpp"

using namespace qgeo;

static void BM_ChernFhs(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto field = band_projector_field(qwz_model(1.0), TorusGrid({k, k}), 0);
  for (auto _ : state) benchmark::DoNotOptimize(chern_fhs(field));
  state.SetItemsProcessed(state.iterations() * k * k);
}
BENCHMARK(BM_ChernFhs)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_MappingDegree(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto field = thermal_family(qwz_model(-1.0), 1.0, TorusGrid({k, k}));
  for (auto _ : state) benchmark::DoNotOptimize(mapping_degree(field).degree);
  state.SetItemsProcessed(state.iterations() * k * k);
}
BENCHMARK(BM_MappingDegree)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_UhlmannTransport(benchmark::State& state) {
  const auto loop = thermal_loop(1.0, 0.2, static_cast<int>(state.range(0)), 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(uhlmann_transport(loop).phase);
}
BENCHMARK(BM_UhlmannTransport)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

static void BM_UhlmannTrace(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto field = smooth_family(1, TorusGrid({k, k}));
  for (auto _ : state) benchmark::DoNotOptimize(uhlmann_chern_trace(field));
}
BENCHMARK(BM_UhlmannTrace)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);

static void BM_FiberwiseEvolve(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const auto base = qwz_model(1.0);
  const auto model = with_jumps(base, depolarizing_jumps(0.5));
  const auto field = thermal_family(base, 0.5, TorusGrid({k, k}));
  for (auto _ : state) benchmark::DoNotOptimize(fiberwise_evolve(model, field, 1.0).values.data());
  state.SetItemsProcessed(state.iterations() * k * k);
}
BENCHMARK(BM_FiberwiseEvolve)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_Rk4Evolve(benchmark::State& state) {
  const GKLSSpec spec{0.5 * pauli::x() + 0.3 * pauli::z(), {0.4 * (pauli::x() - kI * pauli::y()) / 2.0}};
  const DensityMatrix rho = maximally_mixed(2);
  for (auto _ : state) benchmark::DoNotOptimize(evolve(rho, spec, 2.0, RK4{0.01}).mat().data());
}
BENCHMARK(BM_Rk4Evolve);

BENCHMARK_MAIN();
