#include "betti/gorenstein.hpp"
#include "betti/io.hpp"

#include "generators.hpp"

#include <benchmark/benchmark.h>

using namespace betti;

namespace {

void BM_pure_diagram(benchmark::State& state) {
  std::vector<int> degrees;
  for (int i = 0; i < state.range(0); ++i) degrees.push_back(2 * i + i % 2);
  DegreeSequence sigma(degrees);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pure_diagram(sigma));
  }
}
BENCHMARK(BM_pure_diagram)->Arg(4)->Arg(16)->Arg(64);

void BM_greedy_gorenstein(benchmark::State& state) {
  GorensteinParams p(static_cast<int>(state.range(0)), 2,
                     static_cast<int>(state.range(1)));
  BettiTable table = gorenstein_betti(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_decompose(table));
  }
}
BENCHMARK(BM_greedy_gorenstein)->Args({6, 4})->Args({10, 7})->Args({20, 12});

void BM_quotient_decomposition(benchmark::State& state) {
  testgen::Rng rng(17);
  auto f = testgen::random_ferrers(rng, static_cast<int>(state.range(0)), 6, 200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(quotient_decomposition(f));
  }
}
BENCHMARK(BM_quotient_decomposition)->Arg(2)->Arg(3)->Arg(4);

void BM_macaulay_growth(benchmark::State& state) {
  long b = state.range(0);
  for (auto _ : state) {
    for (int d = 1; d <= 6; ++d) {
      benchmark::DoNotOptimize(macaulay_growth(b, d));
    }
  }
}
BENCHMARK(BM_macaulay_growth)->Arg(100)->Arg(10000);

void BM_render_table(benchmark::State& state) {
  BettiTable table = gorenstein_betti(GorensteinParams(10, 3, 8));
  for (auto _ : state) {
    benchmark::DoNotOptimize(io::render_table_text(table));
  }
}
BENCHMARK(BM_render_table);

}  // namespace

BENCHMARK_MAIN();
