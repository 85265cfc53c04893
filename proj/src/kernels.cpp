#include "equimorse/kernels.hpp"

#include <algorithm>

namespace equimorse::kernels {

namespace {

BigInt convolve_at(const DenseBlock& a, const DenseBlock& b, std::int64_t k) {
  BigInt sum = 0;
  if (a.empty() || b.empty()) return sum;
  // i ranges over a's block with k - i inside b's block.
  const auto i_lo = std::max(a.first, k - b.last());
  const auto i_hi = std::min(a.last(), k - b.first);
  for (auto i = i_lo; i <= i_hi; ++i) {
    const auto& ai = a.coeffs[static_cast<std::size_t>(i - a.first)];
    if (ai.is_zero()) continue;
    const auto& bj = b.coeffs[static_cast<std::size_t>(k - i - b.first)];
    if (bj.is_zero()) continue;
    sum += ai * bj;
  }
  return sum;
}

}  // namespace

std::vector<BigInt> convolve_serial(const DenseBlock& a, const DenseBlock& b,
                                    std::int64_t lo, std::int64_t hi) {
  std::vector<BigInt> out;
  if (hi < lo) return out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (auto k = lo; k <= hi; ++k) out.push_back(convolve_at(a, b, k));
  return out;
}

std::vector<BigInt> convolve_parallel(const DenseBlock& a, const DenseBlock& b,
                                      std::int64_t lo, std::int64_t hi) {
  if (hi < lo) return {};
  const auto n = hi - lo + 1;
  std::vector<BigInt> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = convolve_at(a, b, lo + i);
  }
  return out;
}

std::vector<BigInt> convolve(const DenseBlock& a, const DenseBlock& b, std::int64_t lo,
                             std::int64_t hi, Execution exec) {
  return exec == Execution::parallel ? convolve_parallel(a, b, lo, hi)
                                     : convolve_serial(a, b, lo, hi);
}

}  // namespace equimorse::kernels
