#include <benchmark/benchmark.h>

#include "daha/basic_rep.hpp"
#include "daha/poly_rep.hpp"

using namespace daha;

namespace {

std::shared_ptr<const AffineWeylGroup> group(Family f, int n, Twist t = Twist::Untwisted) {
  return std::make_shared<AffineWeylGroup>(RootSystemData::build({f, n, t}));
}

void BM_GeneratorProduct(benchmark::State& state) {
  auto g = group(Family::C, 2, Twist::Twisted);
  const BasicRepresentation rep(g, HeckeParams::symbolic());
  const std::vector<int> word{0, 1, 2, 1};
  const auto len = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(rep.rep_image(0, std::span<const int>(word).first(len)));
}
BENCHMARK(BM_GeneratorProduct)->DenseRange(1, 4);

void BM_ExactDivision(benchmark::State& state) {
  auto g = group(Family::A, 2);
  const RootSystemData& rs = g->root_system();
  const Weight beta = rs.root(0).weight;
  GroupAlgElt f = GroupAlgElt::constant(1);
  const GroupAlgElt b = GroupAlgElt::constant(1) - GroupAlgElt::monomial(beta);
  for (int i = 0; i < state.range(0); ++i) f = f * (b + GroupAlgElt::monomial(Weight{i, 1 - i}));
  const GroupAlgElt prod = f * b;
  for (auto _ : state) benchmark::DoNotOptimize(exact_divide(prod, beta));
}
BENCHMARK(BM_ExactDivision)->DenseRange(1, 4);

void BM_TriangularBall(benchmark::State& state) {
  auto g = group(Family::A, 2);
  const auto ball = g->enumerate_ball(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const BasicRepresentation rep(g, HeckeParams::symbolic());
    TriangularSolver solver(rep);
    for (const auto& e : ball) benchmark::DoNotOptimize(solver.expand(e).ok());
  }
  state.counters["elements"] = static_cast<double>(ball.size());
}
BENCHMARK(BM_TriangularBall)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_PolynomialGenerator(benchmark::State& state) {
  auto g = group(Family::A, 2);
  const PolynomialRepresentation rep(LevelledAction(g, 1), HeckeParams::symbolic());
  const auto box = monomial_box(2, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const Weight& mu : box)
      benchmark::DoNotOptimize(rep.apply_generator(0, GroupAlgElt::monomial(mu)));
}
BENCHMARK(BM_PolynomialGenerator)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
