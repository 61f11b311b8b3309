// Serial reference vs OpenMP path for the scoring kernels. The second
// benchmark argument selects the path: 0 serial, 1 parallel.
#include <benchmark/benchmark.h>

#include <map>

#include "lpleak/embeddings.hpp"
#include "lpleak/generators.hpp"
#include "lpleak/indices.hpp"
#include "lpleak/random.hpp"
#include "lpleak/split.hpp"

using namespace lpleak;

namespace {

const Graph& graph(std::size_t n) {
  static std::map<std::size_t, Graph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gen::powerlaw_cluster(n, 4 * n, 0.5, 7)).first;
  return it->second;
}

PairList pairs_for(const Graph& g) {
  PairList p = sample_nonexistent_pairs(g, 4 * g.node_count(), 3);
  const auto e = g.edges();
  p.insert(p.end(), e.begin(), e.begin() + std::min<std::size_t>(e.size(), g.node_count()));
  return p;
}

Execution exec_of(const benchmark::State& s) { return s.range(1) ? Execution::parallel : Execution::serial; }

template <class F>
void run(benchmark::State& state, F score) {
  const Graph& g = graph(std::size_t(state.range(0)));
  const PairList pairs = pairs_for(g);
  for (auto _ : state) benchmark::DoNotOptimize(score(g, pairs, exec_of(state)));
  state.SetItemsProcessed(std::int64_t(state.iterations() * pairs.size()));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_cn(benchmark::State& s) {
  run(s, [](const Graph& g, const PairList& p, Execution ex) { return score_cn(g, p, ex); });
}
void BM_lp(benchmark::State& s) {
  run(s, [](const Graph& g, const PairList& p, Execution ex) { return score_lp(g, 0.01, p, ex); });
}
void BM_lrw(benchmark::State& s) {
  run(s, [](const Graph& g, const PairList& p, Execution ex) { return score_lrw(g, 5, p, ex); });
}
void BM_katz(benchmark::State& s) {
  run(s, [](const Graph& g, const PairList& p, Execution ex) {
    const double lmax = spectral_radius(g);
    return score_katz(g, 0.5 / lmax, p, ex, lmax);
  });
}
void BM_rwr(benchmark::State& s) {
  run(s, [](const Graph& g, const PairList& p, Execution ex) { return score_rwr(g, 0.5, p, ex); });
}
void BM_tsaa(benchmark::State& s) {
  run(s, [](const Graph& g, const PairList& p, Execution ex) { return score_tsaa(g, 0.5, p, ex); });
}
void BM_walks(benchmark::State& s) {
  const Graph& g = graph(std::size_t(s.range(0)));
  for (auto _ : s) benchmark::DoNotOptimize(generate_walks(g, 10, 40, 1, exec_of(s)));
  s.SetItemsProcessed(std::int64_t(s.iterations() * g.node_count() * 10 * 40));
  s.SetLabel(s.range(1) ? "parallel" : "serial");
}

#define SIZES ArgsProduct({{500, 2000}, {0, 1}})->Unit(benchmark::kMillisecond)

}  // namespace

BENCHMARK(BM_cn)->SIZES;
BENCHMARK(BM_lp)->SIZES;
BENCHMARK(BM_lrw)->SIZES;
BENCHMARK(BM_katz)->SIZES;
BENCHMARK(BM_rwr)->SIZES;
BENCHMARK(BM_tsaa)->SIZES;
BENCHMARK(BM_walks)->SIZES;

BENCHMARK_MAIN();
