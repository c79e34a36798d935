// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "lgrank/ecp.hpp"
#include "lgrank/skewpoly.hpp"

using namespace lgrank;

namespace {

std::shared_ptr<const Extension<Rational>> kummer33() {
  return Extension<Rational>::create(FieldSpec::tower(3, {{3, Rational(2)}, {3, Rational(3)}}, FieldSpec::Base::cyclotomic));
}
std::shared_ptr<const Extension<ModP>> f2n(std::size_t n) {
  return Extension<ModP>::create(FieldSpec::finite_field(2, n));
}

template <class S>
void mul_loop(benchmark::State& state, const GroupAlgebra<S>& alg) {
  Rng rng(1);
  auto x = alg.random_scalar(rng, 3), y = alg.random_scalar(rng, 3);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}

void BM_FieldMulF16(benchmark::State& state) { mul_loop(state, GroupAlgebra<ModP>(f2n(4))); }
void BM_FieldMulTower9(benchmark::State& state) { mul_loop(state, GroupAlgebra<Rational>(kummer33())); }

void BM_ComposeTower9(benchmark::State& state) {
  GroupAlgebra<Rational> alg(kummer33());
  Rng rng(2);
  auto u = alg.random_element(rng, 2), v = alg.random_element(rng, 2);
  for (auto _ : state) benchmark::DoNotOptimize(alg.compose(u, v));
}

void BM_RankFastF2n(benchmark::State& state) {
  GroupAlgebra<ModP> alg(f2n(static_cast<std::size_t>(state.range(0))));
  Rng rng(3);
  auto a = alg.random_element(rng, 1);
  for (auto _ : state) benchmark::DoNotOptimize(alg.rank_fast(a));
}

void BM_RankReportTower9(benchmark::State& state) {
  GroupAlgebra<Rational> alg(kummer33());
  Rng rng(4);
  auto a = alg.random_rank(rng, 5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(alg.rank_report(a));
}

void BM_RmCodeTower9(benchmark::State& state) {
  ThetaAlgebra<Rational> th{GroupAlgebra<Rational>(kummer33())};
  for (auto _ : state) benchmark::DoNotOptimize(th.rm_code(static_cast<std::size_t>(state.range(0))));
}

void BM_MinDistanceF16(benchmark::State& state) {
  ThetaAlgebra<ModP> th{GroupAlgebra<ModP>(f2n(4))};
  const auto code = th.rm_code(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_distance_bruteforce(code));
}

void BM_DecodeTower9(benchmark::State& state) {
  ThetaAlgebra<Rational> th{GroupAlgebra<Rational>(kummer33())};
  const auto pair = rm_ecp_construct(th, 1, 1, 1);
  const auto& alg = th.algebra();
  Rng rng(5);
  std::vector<FieldElement<Rational>> msg;
  for (std::size_t k = 0; k < pair.c.dim(); ++k) msg.push_back(alg.random_scalar(rng, 2));
  const auto word = pair.c.combine(msg) + random_rank_error(alg, 2, 6);
  for (auto _ : state) benchmark::DoNotOptimize(decode(pair, word));
}

void BM_SkewMulTower9(benchmark::State& state) {
  SkewRing<Rational> ring{ThetaAlgebra<Rational>(GroupAlgebra<Rational>(kummer33()))};
  Rng rng(7);
  auto f = ring.random(rng, 4, 4, 2), g = ring.random(rng, 4, 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ring.mul(f, g));
}

void BM_TmaxSearch(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(t_max_search(1, {n, n}));
}

}  // namespace

BENCHMARK(BM_FieldMulF16);
BENCHMARK(BM_FieldMulTower9);
BENCHMARK(BM_ComposeTower9)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RankFastF2n)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_RankReportTower9)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RmCodeTower9)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinDistanceF16)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecodeTower9)->Iterations(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SkewMulTower9)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TmaxSearch)->Arg(4)->Arg(8)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
