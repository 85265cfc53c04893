#include "equimorse/character.hpp"
#include "equimorse/oracle.hpp"
#include "equimorse/verifier.hpp"

#include <benchmark/benchmark.h>

using namespace equimorse;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

kernels::DenseBlock block(std::int64_t first, std::int64_t size, int seed) {
  kernels::DenseBlock b{first, {}};
  for (std::int64_t i = 0; i < size; ++i) b.coeffs.emplace_back((i * 7 + seed) % 11 - 5);
  return b;
}

void BM_Convolve(benchmark::State& state) {
  const auto n = state.range(1);
  const auto a = block(-n / 2, n, 1);
  const auto b = block(-n / 3, n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::convolve(a, b, -n, n, exec_of(state)));
  }
}
BENCHMARK(BM_Convolve)->ArgsProduct({{0, 1}, {256, 2048}})->ArgNames({"parallel", "n"});

void BM_PolarizedProduct(benchmark::State& state) {
  const Window w(-state.range(1), state.range(1));
  for (auto _ : state) {
    auto c = WindowedCharacter::monomial(0, w);
    for (std::int64_t l : {-1, -2, -3, -5}) c = mul(c, sym_line_series(l, w), exec_of(state));
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_PolarizedProduct)->ArgsProduct({{0, 1}, {200, 1000}})->ArgNames({"parallel", "w"});

void BM_MonomialOracle(benchmark::State& state) {
  const std::vector<std::int64_t> weights = {0, 1, 3, 7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) == 0 ? monomial_weights_serial(weights, state.range(1))
                                                 : monomial_weights_parallel(weights, state.range(1)));
  }
}
BENCHMARK(BM_MonomialOracle)->ArgsProduct({{0, 1}, {40, 120}})->ArgNames({"parallel", "d"});

void BM_VerifySweep(benchmark::State& state) {
  const Window w(-state.range(1), state.range(1));
  const auto s = build_cpn_scenario({2, {0, 1, 2}, 6, 0}, w, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_wu_zhang_range(s, w, exec_of(state)));
  }
}
BENCHMARK(BM_VerifySweep)->ArgsProduct({{0, 1}, {50, 200}})->ArgNames({"parallel", "w"});

}  // namespace

BENCHMARK_MAIN();
