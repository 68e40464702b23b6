#include "gct/composite.hpp"
#include "gct/model.hpp"
#include "gct/rational.hpp"
#include "gct/sampling_word.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

// Word with state.range(0) observation draws split across two time advances;
// the result distribution has one atom per label word, so cost grows with 2^k.
gct::SamplingWord probe_word(std::int64_t draws) {
  const auto half = static_cast<std::uint64_t>(draws) / 2;
  const auto rest = static_cast<std::uint64_t>(draws) - half;
  return gct::SamplingWord::normalized(
      {{gct::rat(1, 2), half}, {gct::rat(1), rest}});
}

void BM_CompositeCold(benchmark::State& state) {
  const auto m = gct::repairable_4state(gct::rat(2), gct::rat(3));
  const auto w = probe_word(state.range(0));
  for (auto _ : state) {
    gct::WordGradedKernel k(m);
    benchmark::DoNotOptimize(&k.at(w));
  }
}
BENCHMARK(BM_CompositeCold)->Arg(2)->Arg(6)->Arg(10);

void BM_CompositeMemoHit(benchmark::State& state) {
  gct::WordGradedKernel k(gct::repairable_4state(gct::rat(2), gct::rat(3)));
  const auto w = probe_word(state.range(0));
  k.at(w);
  for (auto _ : state) {
    benchmark::DoNotOptimize(&k.at(w));
  }
}
BENCHMARK(BM_CompositeMemoHit)->Arg(2)->Arg(10);

void BM_KleisliChain(benchmark::State& state) {
  gct::WordGradedKernel k(gct::repairable_4state(gct::rat(2), gct::rat(3)));
  const auto u = probe_word(4);
  const auto v = gct::SamplingWord::single(gct::rat(1, 4), 2);
  const auto base = gct::composite_at(k, u, 3);
  for (auto _ : state) {
    auto d = gct::kleisli_then(base, k, v);
    benchmark::DoNotOptimize(d.atoms().size());
  }
}
BENCHMARK(BM_KleisliChain);

}  // namespace
