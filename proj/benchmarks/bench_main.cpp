#include <benchmark/benchmark.h>

#include <memory>

#include "vhc/constructions.hpp"
#include "vhc/cover.hpp"
#include "vhc/hom_search.hpp"
#include "vhc/hyperplane.hpp"
#include "vhc/quotient_search.hpp"

using namespace vhc;

namespace {

SquareComplex torus() {
  SquareComplex x;
  x.add_vertex();
  x.add_edge(0, 0, Label::V);
  x.add_edge(0, 0, Label::H);
  x.add_square({{0, true}, {1, true}, {0, false}, {1, false}});
  return x;
}

SquareComplex theta() {
  SquareComplex x;
  x.add_vertex();
  x.add_edge(0, 0, Label::V);
  x.add_edge(0, 0, Label::V);
  x.add_edge(0, 0, Label::H);
  x.add_square({{0, true}, {2, true}, {1, false}, {2, false}});
  return x;
}

void BM_TorusCovers(benchmark::State& state) {
  const auto t = std::make_shared<const SquareComplex>(torus());
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_covers(t, d, {true, true}));
}
BENCHMARK(BM_TorusCovers)->DenseRange(2, 5);

void BM_FreeHoms(benchmark::State& state) {
  const HomEnumerator en(WordPresentation{2, {}}, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    HomStats stats;
    en.run_all([](auto) { return false; }, stats);
    benchmark::DoNotOptimize(stats);
  }
}
BENCHMARK(BM_FreeHoms)->DenseRange(3, 5);

void BM_TrivialGroupProbe(benchmark::State& state) {
  const GroupPresentation p({"a", "b"}, std::vector<std::string>{"abABB", "baBAA"});
  SearchBudget b;
  b.max_degree = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(probe_profinite_triviality(p, b));
}
BENCHMARK(BM_TrivialGroupProbe)->DenseRange(3, 6);

void BM_CleanlinessInCovers(benchmark::State& state) {
  const auto t = std::make_shared<const SquareComplex>(theta());
  const auto covers = enumerate_covers(t, static_cast<std::size_t>(state.range(0)), {true, false});
  const Hyperplane y = hyperplane_of(*t, 0);
  for (auto _ : state) {
    for (const Cover& c : covers) {
      const TotalSpace ts = total_space(c);
      for (const Hyperplane& w : preimage_hyperplane_components(c, ts, y)) benchmark::DoNotOptimize(is_clean(ts.complex, w));
    }
  }
}
BENCHMARK(BM_CleanlinessInCovers)->DenseRange(2, 4);

void BM_DoubledVirtualCleanness(benchmark::State& state) {
  const DoubledComplex d = build_xn(make_pointed_pair(torus(), 0), {0, {{0, true}}});
  SearchBudget b;
  b.max_degree = 2;
  for (auto _ : state) benchmark::DoNotOptimize(semi_decide_virtually_clean(d.complex, d.y, b));
}
BENCHMARK(BM_DoubledVirtualCleanness);

}  // namespace

BENCHMARK_MAIN();
