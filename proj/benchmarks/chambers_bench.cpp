#include <benchmark/benchmark.h>

#include "trigrid/chambers.hpp"

using namespace trigrid;

namespace {

ModuliComponent component_of(const char* name) {
  const auto g = *builtin_graph(name);
  return std::get<ModuliComponent>(based_component(g, SlopeSystem::standard(), zero_class(g)));
}

}  // namespace

static void BM_ChambersK33(benchmark::State& state) {
  const auto c = component_of("k33");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(c));
}
BENCHMARK(BM_ChambersK33)->Unit(benchmark::kMillisecond);

static void BM_ChambersTorus8(benchmark::State& state) {
  const auto c = component_of("torus8");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(c));
}
BENCHMARK(BM_ChambersTorus8)->Unit(benchmark::kMillisecond);

static void BM_AdjacencyTorus8(benchmark::State& state) {
  const auto c = component_of("torus8");
  const auto set = enumerate_chambers(c);
  for (auto _ : state) benchmark::DoNotOptimize(chamber_adjacency(c, set));
}
BENCHMARK(BM_AdjacencyTorus8)->Unit(benchmark::kMillisecond);

static void BM_CommonLocusTorus8(benchmark::State& state) {
  const auto c = component_of("torus8");
  const auto set = enumerate_chambers(c);
  for (auto _ : state) benchmark::DoNotOptimize(common_locus(c, set));
}
BENCHMARK(BM_CommonLocusTorus8)->Unit(benchmark::kMillisecond);
