// Timings for the expensive building blocks: character tables, truncated
// series products, generating-series assembly, operator compression, and
// the degree-5 solver.  Character values are memoized process-wide, so that
// benchmark reports warm-cache throughput after its first iteration.

#include <benchmark/benchmark.h>

#include <memory>

#include "htoda/characters.hpp"
#include "htoda/fock.hpp"
#include "htoda/hurwitz.hpp"
#include "htoda/partition.hpp"
#include "htoda/schur.hpp"
#include "htoda/string_equations.hpp"
#include "htoda/tseries.hpp"

using namespace htoda;

namespace {

void BM_CharacterTable(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  auto parts = partitions_of(d);
  for (auto _ : state) {
    Int acc = 0;
    for (const Partition& lam : parts)
      for (const Partition& mu : parts) acc += character(lam, mu);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_CharacterTable)->Arg(6)->Arg(8);

void BM_SchurPolynomial(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  Partition lam({3, 2, 1});
  for (auto _ : state) {
    TSeries s = schur(lam, D);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_SchurPolynomial)->Arg(6)->Arg(8);

void BM_SeriesProduct(benchmark::State& state) {
  // Dense in both variable families, the worst case for the product loop.
  int D = static_cast<int>(state.range(0));
  TSeries a = z_double(D, 4);
  TSeries b = z_simple(D, 4);
  for (auto _ : state) {
    TSeries p = a * b;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_SeriesProduct)->Arg(4)->Arg(5);

void BM_DoubleSeries(benchmark::State& state) {
  int D = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TSeries z = z_double(D, 4);
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_DoubleSeries)->Arg(4)->Arg(5);

void BM_CutAndJoin(benchmark::State& state) {
  TSeries z = z_double(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) {
    TSeries m = cut_and_join(z);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_CutAndJoin)->Arg(4)->Arg(5);

void BM_BilinearCompression(benchmark::State& state) {
  auto table =
      std::make_shared<PartitionTable>(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    BilinearOp j = bilinear(current_spec(1), table, 0);
    BilinearOp g = build_g(table, 0, 4);
    benchmark::DoNotOptimize(op_mul(j, g));
  }
}
BENCHMARK(BM_BilinearCompression)->Arg(6)->Arg(8);

void BM_TauExpansion(benchmark::State& state) {
  for (auto _ : state) {
    TSeries tau = tau_expand(static_cast<int>(state.range(0)), 1, 3);
    benchmark::DoNotOptimize(tau);
  }
}
BENCHMARK(BM_TauExpansion)->Arg(3)->Arg(4);

void BM_StringSolve(benchmark::State& state) {
  for (auto _ : state) {
    StringSolution sol = solve(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(sol);
  }
}
BENCHMARK(BM_StringSolve)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
