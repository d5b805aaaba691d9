#include <benchmark/benchmark.h>

#include <random>

#include "hgcage/generator_file.hpp"
#include "hgcage/girth.hpp"
#include "hgcage/group_table.hpp"
#include "hgcage/word_girth.hpp"

namespace {

using namespace hgcage;

std::vector<Permutation> record(unsigned girth) {
  return read_generator_file(std::filesystem::path(HGCAGE_BENCH_DATA_DIR) / "records" /
                             ("girth" + std::to_string(girth) + ".txt"))
      .generators;
}

void BM_Compose(benchmark::State& state) {
  const auto gens = record(32);
  Permutation x = gens[0];
  for (auto _ : state) {
    x = x * gens[1];
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_Compose);

void BM_EnumerateGirth24Group(benchmark::State& state) {
  const auto gens = record(24);
  for (auto _ : state) benchmark::DoNotOptimize(generate_group(gens).order());
}
BENCHMARK(BM_EnumerateGirth24Group)->Unit(benchmark::kMillisecond);

void BM_WordGirth(benchmark::State& state) {
  const auto gens = record(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alternating_word_girth(gens[0], gens[1]).girth);
}
BENCHMARK(BM_WordGirth)->Arg(24)->Arg(28)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_DualGraphGirth24(benchmark::State& state) {
  const auto gens = record(24);
  const auto graph = dual_cubic_graph(generate_group(gens), gens[0], gens[1]);
  for (auto _ : state) benchmark::DoNotOptimize(graph_girth(graph).girth);
}
BENCHMARK(BM_DualGraphGirth24)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
