#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "cutwave/basis.hpp"
#include "cutwave/fast_cut.hpp"
#include "cutwave/kernels.hpp"
#include "cutwave/spectral_cut.hpp"
#include "cutwave/synth.hpp"

using namespace cutwave;

namespace {

SynthInstance instance(std::size_t n) {
  SynthConfig cfg;
  cfg.n = n;
  cfg.m = 3 * n;
  cfg.seed = 7;
  return generate(cfg);
}

std::vector<double> random_vector(std::size_t n) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(n);
  for (auto& v : x) v = u(gen);
  return x;
}

void BM_LaplacianSerial(benchmark::State& state) {
  const auto inst = instance(static_cast<std::size_t>(state.range(0)));
  const auto x = random_vector(inst.graph.num_vertices());
  std::vector<double> y(x.size());
  for (auto _ : state) {
    laplacian_apply_serial(inst.graph, x, y);
    benchmark::DoNotOptimize(y.data());
  }
}

void BM_LaplacianParallel(benchmark::State& state) {
  const auto inst = instance(static_cast<std::size_t>(state.range(0)));
  const auto x = random_vector(inst.graph.num_vertices());
  std::vector<double> y(x.size());
  for (auto _ : state) {
    laplacian_apply(inst.graph, x, y);
    benchmark::DoNotOptimize(y.data());
  }
}

void BM_ChebApply(benchmark::State& state) {
  const auto inst = instance(20000);
  const auto plan = make_plan(static_cast<std::size_t>(state.range(0)), inst.graph.laplacian_bound());
  const auto f = random_vector(inst.graph.num_vertices());
  for (auto _ : state) benchmark::DoNotOptimize(cheb_apply(inst.graph, plan, f));
}

void BM_FswtCut(benchmark::State& state) {
  const auto inst = instance(static_cast<std::size_t>(state.range(0)));
  const auto all = VertexSet::range(static_cast<Vertex>(inst.graph.num_vertices()));
  const auto region = make_region(inst.graph, inst.signal, all);
  for (auto _ : state) benchmark::DoNotOptimize(fswt_cut(region, inst.planted.cut_edges.size()));
}

void BM_SwtCut(benchmark::State& state) {
  const auto inst = instance(static_cast<std::size_t>(state.range(0)));
  const auto all = VertexSet::range(static_cast<Vertex>(inst.graph.num_vertices()));
  const auto region = make_region(inst.graph, inst.signal, all);
  for (auto _ : state) benchmark::DoNotOptimize(swt_cut(region, inst.planted.cut_edges.size()));
}

void BM_BuildBasis(benchmark::State& state) {
  const auto inst = instance(400);
  BasisConfig cfg;
  cfg.q = 256;
  cfg.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(build_basis(inst.graph, inst.signal, cfg));
}

}  // namespace

BENCHMARK(BM_LaplacianSerial)->Arg(10000)->Arg(100000);
BENCHMARK(BM_LaplacianParallel)->Arg(10000)->Arg(100000);
BENCHMARK(BM_ChebApply)->Arg(5)->Arg(20)->Arg(50);
BENCHMARK(BM_FswtCut)->Arg(200)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SwtCut)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildBasis)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
