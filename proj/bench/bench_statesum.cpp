#include <benchmark/benchmark.h>

#include "tvq/constructions.hpp"
#include "tvq/statesum.hpp"

namespace {

// Tables are built once per (r, evaluation point) and reused across iterations,
// so the timings measure enumeration and weight products.
const tvq::Triangulation& simplex_sphere() {
  static const tvq::Triangulation tri = tvq::Triangulation::build(tvq::boundary_of_4simplex());
  return tri;
}

const tvq::Triangulation& bipyramid_l72() {
  static const tvq::Triangulation tri = tvq::Triangulation::build(tvq::bipyramid_lens_space(7, 2));
  return tri;
}

void BM_Serial(benchmark::State& state, const tvq::Triangulation& (*tri)(), int r) {
  const auto& tables = tvq::quantum_tables(tvq::QSpec::standard(r));
  tvq::class_sums_serial(tri(), tables);
  for (auto _ : state) benchmark::DoNotOptimize(tvq::class_sums_serial(tri(), tables));
}

void BM_Parallel(benchmark::State& state, const tvq::Triangulation& (*tri)(), int r) {
  const auto& tables = tvq::quantum_tables(tvq::QSpec::standard(r));
  const int workers = static_cast<int>(state.range(0));
  tvq::class_sums(tri(), tables, workers);
  for (auto _ : state) benchmark::DoNotOptimize(tvq::class_sums(tri(), tables, workers));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Serial, simplex_sphere_r5, simplex_sphere, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Parallel, simplex_sphere_r5, simplex_sphere, 5)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Serial, bipyramid_l72_r6, bipyramid_l72, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Parallel, bipyramid_l72_r6, bipyramid_l72, 6)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
