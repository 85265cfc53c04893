#pragma once

// Data-parallel inner loops. Every kernel has a serial reference version that
// the tests compare against and the benchmark target times side by side.

#include "equimorse/types.hpp"

#include <cstdint>
#include <exception>
#include <span>
#include <vector>

namespace equimorse {

enum class Execution { serial, parallel };

namespace kernels {

/// Dense coefficient block: coeffs[i] is the coefficient at weight first + i.
struct DenseBlock {
  std::int64_t first = 0;
  std::vector<BigInt> coeffs;

  std::int64_t last() const { return first + static_cast<std::int64_t>(coeffs.size()) - 1; }
  bool empty() const { return coeffs.empty(); }
};

/// c_k = sum_i a_i * b_{k-i} for k in [lo, hi]. Coefficients outside the
/// blocks are taken as zero; callers are responsible for making that exact.
std::vector<BigInt> convolve_serial(const DenseBlock& a, const DenseBlock& b,
                                    std::int64_t lo, std::int64_t hi);
std::vector<BigInt> convolve_parallel(const DenseBlock& a, const DenseBlock& b,
                                      std::int64_t lo, std::int64_t hi);
std::vector<BigInt> convolve(const DenseBlock& a, const DenseBlock& b, std::int64_t lo,
                             std::int64_t hi, Execution exec);

/// Evaluates fn(k) for every k in the window; results in ascending k.
template <class Fn>
auto sweep_serial(const Window& window, Fn&& fn) {
  using Result = decltype(fn(std::int64_t{}));
  std::vector<Result> out;
  out.reserve(static_cast<std::size_t>(window.size()));
  for (std::int64_t k = window.lo(); k <= window.hi(); ++k) out.push_back(fn(k));
  return out;
}

/// Parallel sweep. The first exception (in ascending k) is rethrown after the
/// loop finishes, so failures are reported deterministically.
template <class Fn>
auto sweep_parallel(const Window& window, Fn&& fn) {
  using Result = decltype(fn(std::int64_t{}));
  const auto n = window.size();
  std::vector<std::optional<Result>> slots(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      slots[static_cast<std::size_t>(i)].emplace(fn(window.lo() + i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Result> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

template <class Fn>
auto sweep(const Window& window, Execution exec, Fn&& fn) {
  if (exec == Execution::parallel) return sweep_parallel(window, std::forward<Fn>(fn));
  return sweep_serial(window, std::forward<Fn>(fn));
}

}  // namespace kernels
}  // namespace equimorse
