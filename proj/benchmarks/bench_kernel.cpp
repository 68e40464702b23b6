#include "gct/eigen_solution.hpp"
#include "gct/kernel.hpp"
#include "gct/model.hpp"
#include "gct/rational.hpp"

#include <benchmark/benchmark.h>

namespace {

gct::Rational tick64(std::int64_t n) { return gct::rat(n, 64); }

void BM_KernelUniformization(benchmark::State& state) {
  const auto m = gct::repairable_4state(gct::rat(2), gct::rat(3));
  const auto t = tick64(state.range(0));
  for (auto _ : state) {
    auto k = gct::kernel_at(m.gen, t);
    benchmark::DoNotOptimize(k.p.data());
  }
}
BENCHMARK(BM_KernelUniformization)->Arg(1)->Arg(64)->Arg(320)->Arg(64 * 50);

void BM_KernelEigenReconstruct(benchmark::State& state) {
  const auto m = gct::repairable_4state(gct::rat(2), gct::rat(3));
  const auto es = gct::eigen_solution(m.gen);
  const double t = static_cast<double>(state.range(0)) / 64.0;
  for (auto _ : state) {
    auto p = gct::kernel_from_eigen(*es, t);
    benchmark::DoNotOptimize(p.data());
  }
}
BENCHMARK(BM_KernelEigenReconstruct)->Arg(1)->Arg(64)->Arg(320)->Arg(64 * 50);

void BM_EigenSolve(benchmark::State& state) {
  const auto m = gct::repairable_4state(gct::rat(2), gct::rat(3));
  for (auto _ : state) {
    auto es = gct::eigen_solution(m.gen);
    benchmark::DoNotOptimize(es->v.data());
  }
}
BENCHMARK(BM_EigenSolve);

}  // namespace
