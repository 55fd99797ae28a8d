#include <benchmark/benchmark.h>

#include "thmc/design.hpp"
#include "thmc/exact_lp.hpp"
#include "thmc/hilbert.hpp"
#include "thmc/lattice.hpp"
#include "thmc/markov.hpp"
#include "thmc/polyhedra.hpp"
#include "thmc/snf.hpp"

using namespace thmc;

static void BM_DistinctColumnsB(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(distinct_columns(Model::B, 4, T));
}
BENCHMARK(BM_DistinctColumnsB)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SnfFull(benchmark::State& state) {
  const auto cols = distinct_columns(Model::B, 3, static_cast<int>(state.range(0)));
  const auto A = IntMat::from_columns(cols);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(A));
  state.counters["columns"] = static_cast<double>(cols.size());
}
BENCHMARK(BM_SnfFull)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_LatticeRoute(benchmark::State& state) {
  const auto cols = distinct_columns(Model::B, 4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Lattice::from_generators(cols));
  state.counters["columns"] = static_cast<double>(cols.size());
}
BENCHMARK(BM_LatticeRoute)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ConeFacetsD(benchmark::State& state) {
  const auto cols = distinct_columns(Model::D, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_cone(cols));
}
BENCHMARK(BM_ConeFacetsD)->Arg(5)->Arg(10)->Arg(15)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_FVectorC(benchmark::State& state) {
  const auto cols = distinct_columns(Model::C, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(f_vector(cols));
}
BENCHMARK(BM_FVectorC)->Arg(4)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_HilbertD(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(Model::D, 3, T));
}
BENCHMARK(BM_HilbertD)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_VertexLp(benchmark::State& state) {
  const auto cols = distinct_columns(Model::D, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(polytope_vertices(cols));
}
BENCHMARK(BM_VertexLp)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_MarkovProbe(benchmark::State& state) {
  const int T = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(minimal_connecting_degree(Model::D, 3, T, 3));
}
BENCHMARK(BM_MarkovProbe)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
