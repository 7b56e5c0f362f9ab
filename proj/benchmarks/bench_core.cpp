#include <benchmark/benchmark.h>

#include <random>

#include "minorobs/canonical.hpp"
#include "minorobs/catalog.hpp"
#include "minorobs/codec.hpp"
#include "minorobs/decomposition.hpp"
#include "minorobs/enumerate.hpp"
#include "minorobs/minors.hpp"
#include "minorobs/recognition.hpp"

using namespace minorobs;

namespace {

std::vector<Graph> random_graphs(int count, int n, double p, unsigned seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution edge(p);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (edge(rng)) edges.emplace_back(u, v);
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace

static void BM_CanonicalForm(benchmark::State& state) {
  auto graphs = random_graphs(256, static_cast<int>(state.range(0)), 0.5, 99);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(7)->Arg(9)->Arg(12);

static void BM_ApexRecognition(benchmark::State& state) {
  auto graphs = random_graphs(256, static_cast<int>(state.range(0)), 0.4, 7);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_apex_pseudoforest(graphs[i++ % graphs.size()]));
  }
}
BENCHMARK(BM_ApexRecognition)->Arg(9)->Arg(16);

static void BM_ContainsMinorK4(benchmark::State& state) {
  Graph host = Graph::wheel(static_cast<int>(state.range(0)));
  Graph pattern = Graph::complete(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(contains_minor(host, pattern));
  }
}
BENCHMARK(BM_ContainsMinorK4)->Arg(6)->Arg(10);

static void BM_CatalogScan(benchmark::State& state) {
  ObstructionCatalog catalog = build_catalog();
  std::vector<Graph> patterns = catalog.graphs();
  auto hosts = random_graphs(64, 8, 0.45, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        contains_any_minor(hosts[i++ % hosts.size()], patterns));
  }
}
BENCHMARK(BM_CatalogScan);

static void BM_EnumerationLevel(benchmark::State& state) {
  for (auto _ : state) {
    GraphEnumerator enumerator(false);
    benchmark::DoNotOptimize(
        enumerator.level(static_cast<int>(state.range(0))).size());
  }
}
BENCHMARK(BM_EnumerationLevel)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_TriconnectedComponents(benchmark::State& state) {
  auto graphs = random_graphs(128, 9, 0.35, 11);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        triconnected_components(graphs[i++ % graphs.size()]).members.size());
  }
}
BENCHMARK(BM_TriconnectedComponents);

static void BM_WheelCertificate(benchmark::State& state) {
  Graph host = Graph::complete(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wheel_certificate(host));
  }
}
BENCHMARK(BM_WheelCertificate)->Arg(5)->Arg(7);

static void BM_Graph6RoundTrip(benchmark::State& state) {
  auto graphs = random_graphs(64, 40, 0.5, 13);
  std::size_t i = 0;
  for (auto _ : state) {
    const Graph& g = graphs[i++ % graphs.size()];
    benchmark::DoNotOptimize(decode_graph6(encode_graph6(g)));
  }
}
BENCHMARK(BM_Graph6RoundTrip);

BENCHMARK_MAIN();
