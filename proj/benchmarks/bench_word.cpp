#include "gct/sampling_word.hpp"

#include <benchmark/benchmark.h>

#include <cstddef>
#include <string>
#include <vector>

namespace {

void BM_WordMultiply(benchmark::State& state) {
  const auto words = gct::sample_words(256, 20240917u);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& u = words[i % words.size()];
    const auto& v = words[(i + 7) % words.size()];
    auto w = gct::samp_mul(u, v);
    benchmark::DoNotOptimize(w.segments().size());
    ++i;
  }
}
BENCHMARK(BM_WordMultiply);

void BM_WordParsePrint(benchmark::State& state) {
  const auto words = gct::sample_words(256, 7u);
  std::vector<std::string> texts;
  texts.reserve(words.size());
  for (const auto& w : words) texts.push_back(w.str());
  std::size_t i = 0;
  for (auto _ : state) {
    auto w = gct::parse_word(texts[i % texts.size()]);
    benchmark::DoNotOptimize(w->str().size());
    ++i;
  }
}
BENCHMARK(BM_WordParsePrint);

void BM_MonoidCheck(benchmark::State& state) {
  for (auto _ : state) {
    auto rep = gct::check_sampling_monoid(static_cast<int>(state.range(0)), 11u);
    benchmark::DoNotOptimize(rep.passed);
  }
}
BENCHMARK(BM_MonoidCheck)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
