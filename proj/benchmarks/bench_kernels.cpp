#include <benchmark/benchmark.h>

#include "bellcong/congruences.hpp"
#include "bellcong/oracle.hpp"
#include "bellcong/sequences.hpp"

namespace {

using namespace bellcong;

void BM_BellRow(benchmark::State& state) {
  auto ctx = make_context(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    BellRow row = bell_row(*ctx);
    benchmark::DoNotOptimize(row.values().data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BellRow)->Arg(101)->Arg(1009)->Arg(9973)->Unit(benchmark::kMillisecond)->Complexity();

void BM_BellTriangleRow(benchmark::State& state) {
  auto ctx = make_context(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    BellRow row = bell_triangle_row(*ctx);
    benchmark::DoNotOptimize(row.values().data());
  }
}
BENCHMARK(BM_BellTriangleRow)->Arg(101)->Arg(1009)->Arg(9973)->Unit(benchmark::kMillisecond);

void BM_DerangementRow(benchmark::State& state) {
  auto ctx = make_context(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    DerangementRow row = derangement_row(*ctx);
    benchmark::DoNotOptimize(row.values().data());
  }
}
BENCHMARK(BM_DerangementRow)->Arg(1009)->Arg(9973);

void BM_TouchardPolys(benchmark::State& state) {
  auto ctx = make_context(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    auto polys = touchard_polys(ctx->modulus() - 1, *ctx);
    benchmark::DoNotOptimize(polys.data());
  }
}
BENCHMARK(BM_TouchardPolys)->Arg(31)->Arg(61)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_TouchardPolysByRecursion(benchmark::State& state) {
  auto ctx = make_context(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    auto polys = touchard_polys_by_recursion(ctx->modulus() - 1, *ctx);
    benchmark::DoNotOptimize(polys.data());
  }
}
BENCHMARK(BM_TouchardPolysByRecursion)->Arg(31)->Arg(61)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_Theorem1Sweep(benchmark::State& state) {
  const PrimeTables tables(static_cast<std::uint64_t>(state.range(0)));
  const std::uint64_t p = tables.p();
  for (auto _ : state) {
    std::size_t passed = 0;
    for (std::uint64_t m = 1; m <= 2 * p; ++m) {
      if (m % p != 0) passed += verify_theorem1(tables, m).pass;
    }
    benchmark::DoNotOptimize(passed);
  }
}
BENCHMARK(BM_Theorem1Sweep)->Arg(101)->Arg(499)->Arg(1009)->Unit(benchmark::kMillisecond);

void BM_Theorem2Poly(benchmark::State& state) {
  const PrimeTables tables(static_cast<std::uint64_t>(state.range(0)));
  tables.touchard();
  for (auto _ : state) {
    auto r = verify_theorem2(tables, 2);
    benchmark::DoNotOptimize(r.pass);
  }
}
BENCHMARK(BM_Theorem2Poly)->Arg(31)->Arg(61)->Arg(101);

void BM_BigIntMul(benchmark::State& state) {
  const BigInt a = factorial(static_cast<std::uint32_t>(state.range(0)));
  const BigInt b = a + BigInt(12345);
  for (auto _ : state) {
    BigInt c = a * b;
    benchmark::DoNotOptimize(c.limbs().data());
  }
}
BENCHMARK(BM_BigIntMul)->Arg(100)->Arg(500)->Arg(1000);

void BM_BellExactTable(benchmark::State& state) {
  // The oracle memoizes, so only the first iteration does real work; the
  // subsequent ones measure the copy out of the cache.
  for (auto _ : state) {
    auto table = oracle::bell_exact_table(static_cast<std::uint32_t>(state.range(0)));
    benchmark::DoNotOptimize(table.data());
  }
}
BENCHMARK(BM_BellExactTable)->Arg(300)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
