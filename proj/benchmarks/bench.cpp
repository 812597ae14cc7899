#include <benchmark/benchmark.h>

#include "freealg/cohomology.hpp"
#include "freealg/lie.hpp"
#include "freealg/matrix.hpp"
#include "freealg/operators.hpp"
#include "freealg/series.hpp"

using namespace freealg;

namespace {

void BM_Delta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  NCPoly f(n);
  for (const Word& w : word_basis(n, d)) f += NCPoly::monomial(n, w);
  for (auto _ : state) benchmark::DoNotOptimize(delta(f));
}
BENCHMARK(BM_Delta)->Args({3, 3})->Args({4, 4});

void BM_Projector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  NCPoly f(n);
  for (const Word& w : word_basis(n, d)) f += NCPoly::monomial(n, w);
  for (auto _ : state) benchmark::DoNotOptimize(p_project(f));
}
BENCHMARK(BM_Projector)->Args({2, 3})->Args({3, 3});

void BM_Homotopy(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const auto basis = word_basis(n, d);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_homotopy(NCPoly::monomial(n, basis[i])));
    i = (i + 1) % basis.size();
  }
}
BENCHMARK(BM_Homotopy)->Args({3, 3})->Args({3, 4});

void BM_InvariantHomotopy(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto basis = word_basis(2, d);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_a(NCPoly::monomial(2, basis[i])));
    i = (i + 1) % basis.size();
  }
}
BENCHMARK(BM_InvariantHomotopy)->Arg(3)->Arg(4);

void BM_LyndonBasis(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(lyndon_basis(n, d));
}
BENCHMARK(BM_LyndonBasis)->Args({2, 6})->Args({3, 5});

void BM_OperatorMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(operator_matrix(Algebra::Assoc, n, d));
}
BENCHMARK(BM_OperatorMatrix)->Args({3, 3})->Args({4, 4});

void BM_ExactRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const QMatrix m = operator_matrix(Algebra::Assoc, n, d);
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(m));
}
BENCHMARK(BM_ExactRank)->Args({3, 3})->Args({4, 4});

void BM_BettiTable(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(betti_table(Algebra::Assoc, 4, 4, false, threads));
}
BENCHMARK(BM_BettiTable)->Arg(1)->Arg(4);

void BM_Campbell(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bch(depth));
}
BENCHMARK(BM_Campbell)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
