#include <benchmark/benchmark.h>

#include "qwalk/limits.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

const InitialState kInit{0.5, Complex(0.0, 0.5), 0.5, Complex(0.0, 0.5)};

void BM_EvolveHadamard(benchmark::State& state) {
  const CoinMatrix coin = build_hadamard_coin();
  const auto steps = static_cast<TimeStep>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(make_initial(kInit), coin, steps));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EvolveHadamard)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_EvolveGrover(benchmark::State& state) {
  const CoinMatrix coin = build_grover_coin();
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(make_initial(kInit), coin, state.range(0)));
  }
}
BENCHMARK(BM_EvolveGrover)->Arg(1000)->Arg(10000);

void BM_FourierPropagate(benchmark::State& state) {
  const CoinMatrix coin = build_hadamard_coin();
  const auto t = static_cast<TimeStep>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fourier_propagate(coin, kInit, t, static_cast<std::size_t>(2 * t + 8)));
  }
}
BENCHMARK(BM_FourierPropagate)->Arg(50)->Arg(200);

void BM_Eigensystem(benchmark::State& state) {
  const CoinMatrix coin = build_hadamard_coin();
  double k = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigensystem(build_momentum_operator(coin, k)));
    k += 1e-3;
  }
}
BENCHMARK(BM_Eigensystem);

void BM_SpectralMoments(benchmark::State& state) {
  const CoinMatrix coin = build_hadamard_coin();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        limit_moments_spectral(coin, kInit, 4, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_SpectralMoments)->Arg(256)->Arg(1024);

}  // namespace
BENCHMARK_MAIN();
