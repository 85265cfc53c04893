#include "equimorse/types.hpp"

#include <charconv>
#include <string>

namespace equimorse {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw Error("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Window::Window(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
  if (lo > hi) {
    throw Error("invalid window [" + std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

std::optional<Window> Window::intersect(const Window& other) const {
  const auto lo = std::max(lo_, other.lo_);
  const auto hi = std::min(hi_, other.hi_);
  if (lo > hi) return std::nullopt;
  return Window(lo, hi);
}

Window parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto k = parse_int(text, "range");
    return {k, k};
  }
  const auto lo = parse_int(text.substr(0, dots), "range");
  const auto hi = parse_int(text.substr(dots + 2), "range");
  if (lo > hi) throw Error("invalid range '" + std::string(text) + "': lo > hi");
  return {lo, hi};
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, "rational"));
  const auto num = parse_int(text.substr(0, slash), "rational");
  const auto den = parse_int(text.substr(slash + 1), "rational");
  if (den == 0) throw Error("invalid rational '" + std::string(text) + "': zero denominator");
  return {num, den};
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t checked_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw Error("integer overflow: " + v.str());
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace equimorse
