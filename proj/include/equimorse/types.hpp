#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace equimorse {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<std::int64_t>;

/// Error raised for every contract violation the user can trigger
/// (bad input, out-of-window access, invalid scenarios).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weight k of an irreducible circle representation.
struct Weight {
  std::int64_t value{};

  constexpr Weight() = default;
  constexpr explicit Weight(std::int64_t v) : value(v) {}

  constexpr auto operator<=>(const Weight&) const = default;
};

/// Closed weight interval [lo, hi] on which series coefficients are kept exactly.
class Window {
 public:
  Window(std::int64_t lo, std::int64_t hi);

  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  std::int64_t size() const { return hi_ - lo_ + 1; }

  bool contains(std::int64_t k) const { return lo_ <= k && k <= hi_; }
  bool contains(const Window& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }

  Window shifted(std::int64_t by) const { return {lo_ + by, hi_ + by}; }

  /// Empty when the two windows do not overlap.
  std::optional<Window> intersect(const Window& other) const;

  bool operator==(const Window&) const = default;

 private:
  std::int64_t lo_;
  std::int64_t hi_;
};

/// Parses `lo..hi` (inclusive). A bare integer `k` gives [k, k].
Window parse_range(std::string_view text);

/// Parses `p/q` or `p`; the result is normalized.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

std::int64_t checked_int64(const BigInt& v);

}  // namespace equimorse
