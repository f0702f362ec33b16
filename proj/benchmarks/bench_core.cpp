#include <benchmark/benchmark.h>

#include "adic/gammagraph.hpp"
#include "adic/p1tree.hpp"
#include "adic/quasitop.hpp"
#include "adic/ranger.hpp"
#include "generators.hpp"
#include "graph_gen.hpp"
#include "p1_oracle.hpp"

namespace {

using namespace adic;
using testing::Rng;

void BM_RangerCompareGrid(benchmark::State& state) {
  const auto rs = testing::ranger_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int less = 0;
    for (const auto& a : rs) {
      for (const auto& b : rs) less += a < b;
    }
    benchmark::DoNotOptimize(less);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(rs.size() * rs.size()));
}
BENCHMARK(BM_RangerCompareGrid)->Arg(1)->Arg(2)->Arg(3);

void BM_ClassifyCuts(benchmark::State& state) {
  Rng rng(1);
  std::vector<Ranger> cuts;
  while (cuts.size() < 256) {
    const Ranger r = testing::random_ranger(rng, 4);
    if (r.is_cut()) cuts.push_back(r);
  }
  for (auto _ : state) {
    for (const auto& r : cuts) benchmark::DoNotOptimize(classify(r));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cuts.size()));
}
BENCHMARK(BM_ClassifyCuts);

void BM_Retract(benchmark::State& state) {
  Rng rng(2);
  const GammaGraph g = testing::random_graph_with_skeleton(rng, 2);
  std::vector<GraphPoint> pts;
  for (int i = 0; i < 64; ++i) pts.push_back(testing::random_point(rng, g));
  const Ranger t = Ranger::principal(GroupElem({1, 0}));
  for (auto _ : state) {
    for (const auto& x : pts) benchmark::DoNotOptimize(retract(g, t, x));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_Retract);

void BM_P1Distance(benchmark::State& state) {
  Rng rng(3);
  const CenterConfig c = testing::hierarchical_config(rng, 2, static_cast<int>(state.range(0)));
  std::vector<P1Point> pts;
  for (int i = 0; i < 32; ++i) {
    pts.push_back(P1Point::monomial(c, rng() % c.size(), Ranger::principal(testing::random_elem(rng, 2))));
  }
  for (auto _ : state) {
    for (const auto& x : pts) {
      for (const auto& y : pts) benchmark::DoNotOptimize(distance(c, x, y));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size() * pts.size()));
}
BENCHMARK(BM_P1Distance)->Arg(4)->Arg(8)->Arg(16);

void BM_EvalAbs(benchmark::State& state) {
  Rng rng(4);
  const CenterConfig c = testing::hierarchical_config(rng, 2, 8);
  const FactoredFn f = testing::random_fn(rng, c, false, 6);
  std::vector<P1Point> pts;
  for (int i = 0; i < 64; ++i) pts.push_back(P1Point::monomial(c, rng() % c.size(), testing::random_radius(rng, c)));
  for (auto _ : state) {
    for (const auto& x : pts) benchmark::DoNotOptimize(eval_abs(c, f, x));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pts.size()));
}
BENCHMARK(BM_EvalAbs);

void BM_Triangulate(benchmark::State& state) {
  Rng rng(5);
  const CenterConfig c = testing::hierarchical_config(rng, 2, static_cast<int>(state.range(0)));
  std::vector<P1Point> marked;
  for (std::size_t a = 0; a < c.size(); ++a) marked.push_back(P1Point::classical(a));
  for (auto _ : state) benchmark::DoNotOptimize(triangulate(c, marked));
}
BENCHMARK(BM_Triangulate)->Arg(4)->Arg(8)->Arg(16);

void BM_QuasiTreeCheck(benchmark::State& state) {
  std::vector<std::string> s;
  for (int i = 0; i < state.range(0); ++i) s.push_back("s" + std::to_string(i));
  const FiniteSpace sp = ranger_complete(s);
  for (auto _ : state) benchmark::DoNotOptimize(check_quasi_tree(sp, 64));
}
BENCHMARK(BM_QuasiTreeCheck)->Arg(2)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
