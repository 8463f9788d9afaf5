#include <benchmark/benchmark.h>

#include "logpair/peeling.hpp"
#include "logpair/search.hpp"
#include "logpair/worked_examples.hpp"
#include "logpair/zariski.hpp"

namespace {

using namespace logpair;

void BM_Intersect(benchmark::State& state) {
  const auto m = SurfaceModel::plane_blowup(static_cast<std::size_t>(state.range(0)));
  const DivisorClass a(std::vector<Rational>(m.rank(), Rational(1)));
  const DivisorClass b(std::vector<Rational>(m.rank(), Rational(2)));
  for (auto _ : state) benchmark::DoNotOptimize(intersect(m, a, b));
}
BENCHMARK(BM_Intersect)->Arg(8)->Arg(64);

void BM_BarkExampleTwo(benchmark::State& state) {
  const auto g = example2_graph(example2_data());
  for (auto _ : state) benchmark::DoNotOptimize(bark(g));
}
BENCHMARK(BM_BarkExampleTwo);

void BM_ZariskiExampleTwo(benchmark::State& state) {
  const auto d = example2_data();
  const DivisorClass X = canonical_class(d.model) + d.D;
  for (auto _ : state) benchmark::DoNotOptimize(zariski_decompose(d.model, X, d.components));
}
BENCHMARK(BM_ZariskiExampleTwo);

void BM_SearchGrid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(example4_search({8, 40}, {5, 12}, {0, 5}, std::nullopt, 1));
}
BENCHMARK(BM_SearchGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
