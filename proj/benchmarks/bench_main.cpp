#include "rankbound/codes/bounds.hpp"
#include "rankbound/codes/lemma.hpp"
#include "rankbound/graph/rank.hpp"
#include "rankbound/hunt/canonical.hpp"
#include "rankbound/hunt/enumerate.hpp"
#include "rankbound/hunt/extremal.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace rankbound;

namespace {

graph::Graph random_graph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  graph::Graph g(n);
  for (graph::Vertex u = 0; u < n; ++u) {
    for (graph::Vertex v = u + 1; v < n; ++v) {
      if (rng() & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

void BM_RankRandom(benchmark::State& state) {
  const graph::Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(graph::rank(g));
}
BENCHMARK(BM_RankRandom)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_RankExtremal(benchmark::State& state) {
  const graph::Graph g = hunt::construct_extremal(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graph::rank(g));
}
BENCHMARK(BM_RankExtremal)->Arg(8)->Arg(10)->Arg(12);

void BM_CanonicalForm(benchmark::State& state) {
  const hunt::SmallGraph g = hunt::SmallGraph::from_graph(random_graph(10, 11));
  for (auto _ : state) benchmark::DoNotOptimize(hunt::canonical_form(g).code);
}
BENCHMARK(BM_CanonicalForm);

void BM_Enumerate(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    hunt::for_each_graph(order, {}, [&](const hunt::SmallGraph&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);

void BM_LevenshteinS0(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(codes::levenshtein_bound(n, exact::QSqrt2::s0()).value);
}
BENCHMARK(BM_LevenshteinS0)->Arg(10)->Arg(47)->Arg(118)->Unit(benchmark::kMicrosecond);

void BM_CodeLemmaRange(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(codes::verify_code_lemma(47, 118, -4).size());
}
BENCHMARK(BM_CodeLemmaRange)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
