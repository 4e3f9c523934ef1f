#include <benchmark/benchmark.h>

#include <random>

#include "bingtau/collapse.hpp"
#include "bingtau/parse.hpp"
#include "bingtau/pipelines.hpp"
#include "bingtau/tau.hpp"

using namespace bingtau;

namespace {

KnotExpr random_expr(std::mt19937& rng, int depth) {
  auto twist = [&] { return std::uniform_int_distribution<int>(-6, 6)(rng); };
  if (depth <= 0)
    return (rng() % 3) ? make_base(rng() % 2 ? "RHT" : "LHT") : unknot();
  switch (rng() % 5) {
    case 0:
      return mirror(random_expr(rng, depth - 1));
    case 1:
      return reverse(random_expr(rng, depth - 1));
    case 2:
      return connected_sum(random_expr(rng, depth - 1),
                           random_expr(rng, depth - 1));
    default:
      return doubling(random_expr(rng, depth - 1), twist(),
                      random_expr(rng, depth - 1), twist());
  }
}

TreeShape complete_tree(int levels) {
  if (levels == 0) return TreeShape::leaf();
  TreeShape sub = complete_tree(levels - 1);
  return TreeShape::node(sub, sub);
}

void BM_Normalize(benchmark::State& state) {
  std::mt19937 rng(12);
  std::vector<KnotExpr> exprs;
  for (int i = 0; i < 64; ++i)
    exprs.push_back(random_expr(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(exprs[i++ % exprs.size()]));
  }
}
BENCHMARK(BM_Normalize)->Arg(4)->Arg(6)->Arg(8);

void BM_Tau(benchmark::State& state) {
  const KnotDatabase db = KnotDatabase::builtin();
  std::mt19937 rng(34);
  std::vector<KnotExpr> exprs;
  for (int i = 0; i < 64; ++i)
    exprs.push_back(random_expr(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tau(exprs[i++ % exprs.size()], db));
  }
}
BENCHMARK(BM_Tau)->Arg(4)->Arg(6)->Arg(8);

void BM_CollapseFull(benchmark::State& state) {
  const KnotDatabase db = KnotDatabase::builtin();
  const TreeShape shape = complete_tree(static_cast<int>(state.range(0)));
  const LabeledTree tree = wh_plus_bing_labeled(shape);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        collapse_full(tree, {}, RoleAssignment::LeftIsP, &db));
  }
  state.SetComplexityN(static_cast<std::int64_t>(shape.leaf_count()));
}
BENCHMARK(BM_CollapseFull)->Arg(2)->Arg(3)->Arg(4)->Arg(5)->Complexity();

void BM_BingCertificateJson(benchmark::State& state) {
  const KnotDatabase db = KnotDatabase::builtin();
  const TreeShape shape = complete_tree(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        certificate_to_json_text(obstruct_bing_double(shape, "RHT", db)));
  }
}
BENCHMARK(BM_BingCertificateJson)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
