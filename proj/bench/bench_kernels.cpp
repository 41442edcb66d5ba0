#include <benchmark/benchmark.h>

#include <omp.h>

#include "hexbrace/brace.hpp"
#include "hexbrace/corpus.hpp"
#include "hexbrace/hexagon.hpp"

using namespace hexbrace;

namespace {

const HexagonGraph& petersen_hexagon() {
  static const HexagonGraph h = build_hexagon_graph(corpus::petersen());
  return h;
}

// Two 6-cycles joined by the twisted matching i ~ 6 + (i + 3) mod 6; 2^12
// blue matchings.
const HexagonGraph& ring_hexagon() {
  static const HexagonGraph h = [] {
    LabeledGraph g(12);
    for (Vertex i = 0; i < 6; ++i) {
      g.add_edge(i, (i + 1) % 6);
      g.add_edge(6 + i, 6 + (i + 1) % 6);
      g.add_edge(i, 6 + (i + 3) % 6);
    }
    return build_hexagon_graph(g);
  }();
  return h;
}

void BM_SafeSearchReference(benchmark::State& st) {
  const auto& h = ring_hexagon();
  for (auto _ : st) benchmark::DoNotOptimize(find_safe_matching_reference(h));
}

void BM_SafeSearch(benchmark::State& st) {
  const auto& h = ring_hexagon();
  const int jobs = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(find_safe_matching(h, jobs));
}

void BM_BraceReference(benchmark::State& st) {
  const auto& g = petersen_hexagon().graph;
  for (auto _ : st) benchmark::DoNotOptimize(is_brace_reference(g));
}

void BM_Brace(benchmark::State& st) {
  const auto& g = petersen_hexagon().graph;
  const int jobs = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(is_brace(g, jobs));
}

void jobs_args(benchmark::internal::Benchmark* b) {
  const int max = omp_get_max_threads();
  for (int j = 1; j <= max; j *= 2) b->Arg(j);
  if ((max & (max - 1)) != 0) b->Arg(max);
}

}  // namespace

BENCHMARK(BM_SafeSearchReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SafeSearch)->Apply(jobs_args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BraceReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Brace)->Apply(jobs_args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
