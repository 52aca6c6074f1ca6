#include <benchmark/benchmark.h>

#include "fpb/atlas.hpp"
#include "fpb/diagram.hpp"
#include "fpb/invariants.hpp"

using namespace fpb;

namespace {

BasketWord staircase_word(int n) {
  std::vector<int> letters;
  for (int r = 0; r < 2; ++r) {
    for (int i = 1; i <= n; ++i) letters.push_back(i);
  }
  return BasketWord::validate(letters);
}

void BM_KauffmanBracket(benchmark::State& state) {
  const auto d = to_planar_diagram(staircase_word(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
  state.counters["crossings"] = static_cast<double>(d.crossings.size());
}
BENCHMARK(BM_KauffmanBracket)->DenseRange(2, 6);

void BM_Fingerprint(benchmark::State& state) {
  const auto w = staircase_word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(w));
}
BENCHMARK(BM_Fingerprint)->DenseRange(2, 6);

void BM_CanonicalForm(benchmark::State& state) {
  const auto w = staircase_word(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(w));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(2, 6);

void BM_Atlas(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_atlas(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Atlas)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
