#include <benchmark/benchmark.h>

#include "ke/explorer.hpp"
#include "ke/independence.hpp"
#include "ke/invariants.hpp"
#include "ke/matching.hpp"
#include "ke/recognition.hpp"

namespace {

ke::Graph bench_graph(int n, double p) {
  ke::TrialConfig config;
  config.seed = 77;
  config.graph_n_max = n;
  config.edge_probability = p;
  return ke::random_graph(config, 0);
}

// overlapping 2-set chain {1,2},{2,3},...: hke, so every route has to walk
// the whole subset lattice
ke::SetCollection chain_collection(int size) {
  std::vector<ke::FiniteSet> members;
  for (int i = 1; i <= size; ++i) members.push_back(ke::FiniteSet{i, i + 1});
  return ke::SetCollection(std::move(members));
}

void BM_AlphaGraph(benchmark::State& state) {
  const ke::Graph g = bench_graph(static_cast<int>(state.range(0)), 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ke::alpha_graph(g));
  }
}
BENCHMARK(BM_AlphaGraph)->Arg(16)->Arg(20)->Arg(24);

void BM_Mu(benchmark::State& state) {
  const ke::Graph g = bench_graph(static_cast<int>(state.range(0)), 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ke::mu(g).size);
  }
}
BENCHMARK(BM_Mu)->Arg(16)->Arg(24);

void BM_Omega(benchmark::State& state) {
  const ke::Graph g = bench_graph(static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ke::omega(g).size());
  }
}
BENCHMARK(BM_Omega)->Arg(14)->Arg(18);

void BM_HkeBruteforce(benchmark::State& state) {
  const ke::SetCollection c = chain_collection(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ke::is_hke_bruteforce(c));
  }
}
BENCHMARK(BM_HkeBruteforce)->Arg(8)->Arg(12)->Arg(16);

void BM_HkeDuality(benchmark::State& state) {
  const ke::SetCollection c = chain_collection(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ke::is_hke_via_duality(c).hke);
  }
}
BENCHMARK(BM_HkeDuality)->Arg(6)->Arg(8)->Arg(10);

void BM_ComputeM(benchmark::State& state) {
  // k singletons: every removal leaves e = k - 1, so m is defined at any size
  std::vector<ke::FiniteSet> members;
  for (int i = 1; i <= state.range(0); ++i) members.push_back(ke::FiniteSet{i});
  const ke::SetCollection c(std::move(members));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ke::compute_m(c).m);
  }
}
BENCHMARK(BM_ComputeM)->Arg(8)->Arg(16);

void BM_CertificateSearch(benchmark::State& state) {
  // the 7-vertex non-KE graph forces the search to exhaust its hke families
  const ke::Graph g(7, {{1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 4},
                        {3, 6}, {4, 6}, {4, 7}, {5, 7}, {6, 7}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ke::ke_certificate_search(g).has_value());
  }
}
BENCHMARK(BM_CertificateSearch);

void BM_StressTriangleExhaustive(benchmark::State& state) {
  ke::TrialConfig config;
  config.universe_max = 5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ke::stress(ke::TheoremId::Triangle, config, true).instances_checked);
  }
}
BENCHMARK(BM_StressTriangleExhaustive);

}  // namespace

BENCHMARK_MAIN();
