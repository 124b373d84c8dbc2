#include <bimatch/explorer.hpp>
#include <bimatch/gcg.hpp>
#include <bimatch/hamsandwich.hpp>
#include <bimatch/reconfig.hpp>
#include <bimatch/reflex_match.hpp>

#include <benchmark/benchmark.h>

#include <random>
#include <set>

namespace {

using namespace bimatch;

// Random general-position instance with integer coordinates.
BichromaticPointSet instance(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> coord(0, 1000000);
  for (;;) {
    std::set<long> xs;
    std::vector<Point> reds, blues;
    while (static_cast<int>(reds.size() + blues.size()) < 2 * n) {
      const long x = coord(rng);
      if (!xs.insert(x).second) continue;
      (reds.size() < static_cast<std::size_t>(n) ? reds : blues).push_back(Point{Scalar(x), Scalar(coord(rng))});
    }
    try {
      return BichromaticPointSet(std::move(reds), std::move(blues));
    } catch (const PreconditionError&) {
    }
  }
}

void BM_HamSandwichMatching(benchmark::State& state) {
  const auto P = instance(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ham_sandwich_matching(P));
}
BENCHMARK(BM_HamSandwichMatching)->Arg(2)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Enumerate(benchmark::State& state) {
  const auto P = instance(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_matchings(P));
}
BENCHMARK(BM_Enumerate)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

// Connect from the enumerated matching that differs most from the target.
void BM_Connect(benchmark::State& state) {
  const auto P = instance(static_cast<int>(state.range(0)), 3);
  const BRMatching H = ham_sandwich_matching(P).matching;
  BRMatching start = H;
  std::size_t shared = P.n() + 1;
  for (const BRMatching& M : enumerate_matchings(P)) {
    std::size_t s = 0;
    for (const MatchPair& p : M.pairs()) s += H.contains(p);
    if (s < shared) {
      shared = s;
      start = M;
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(connect(P, start));
}
BENCHMARK(BM_Connect)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_CompatibleGraph(benchmark::State& state) {
  const auto P = instance(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(build_graph(P)));
}
BENCHMARK(BM_CompatibleGraph)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

// A square with the ham-sandwich matching glued in, then simplified and
// re-matched.
Gcg glued_square(int n) {
  const auto P = instance(n, 5);
  std::vector<PslgVertex> vs{{Point{Scalar(-1), Scalar(-1)}},
                             {Point{Scalar(1000001), Scalar(-1)}},
                             {Point{Scalar(1000001), Scalar(1000001)}},
                             {Point{Scalar(-1), Scalar(1000001)}}};
  const Gcg square(build_pslg(vs, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  std::vector<FreeSegment> segs;
  const BRMatching H = ham_sandwich_matching(P).matching;
  for (const MatchPair& p : H.pairs()) segs.push_back(free_segment(P, p));
  return glue_matching(square, segs);
}

void BM_GlueMatching(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(glued_square(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GlueMatching)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MatchReflexInGcg(benchmark::State& state) {
  const Gcg G = glued_square(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(match_reflex_in_gcg(G));
}
BENCHMARK(BM_MatchReflexInGcg)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
