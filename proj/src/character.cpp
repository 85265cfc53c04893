#include "equimorse/character.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace equimorse {

namespace {

std::string weight_text(std::int64_t k) { return std::to_string(k); }

}  // namespace

std::string to_string(SupportKind kind) {
  switch (kind) {
    case SupportKind::finite: return "finite";
    case SupportKind::bounded_below: return "bounded_below";
    case SupportKind::bounded_above: return "bounded_above";
    case SupportKind::unbounded: return "unbounded";
  }
  return "unknown";
}

WindowedCharacter::WindowedCharacter(Window window, Terms terms,
                                     std::optional<std::int64_t> lower,
                                     std::optional<std::int64_t> upper, bool is_virtual,
                                     std::shared_ptr<const Regenerator> regen)
    : window_(window),
      terms_(std::move(terms)),
      lower_(lower),
      upper_(upper),
      virtual_(is_virtual),
      regen_(std::move(regen)) {
  normalize();
  check_invariants();
}

WindowedCharacter with_virtual(WindowedCharacter c, bool is_virtual) {
  c.virtual_ = is_virtual;
  return c;
}

void WindowedCharacter::normalize() {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  // With finite support inside the window every nonzero term is stored, so
  // the bounds can be made tight.
  if (lower_ && upper_ && window_.lo() <= *lower_ && *upper_ <= window_.hi()) {
    if (terms_.empty()) {
      lower_ = upper_ = window_.lo();
    } else {
      lower_ = terms_.begin()->first;
      upper_ = terms_.rbegin()->first;
    }
  }
}

void WindowedCharacter::check_invariants() const {
  for (const auto& [k, c] : terms_) {
    if (!window_.contains(k)) throw std::logic_error("stored term outside window");
    if ((lower_ && k < *lower_) || (upper_ && k > *upper_)) {
      throw std::logic_error("nonzero coefficient at weight " + weight_text(k) +
                             " outside declared support");
    }
    if (!virtual_ && c < 0) {
      throw Error("negative multiplicity " + c.str() + " at weight " + weight_text(k) +
                  " in a non-virtual character");
    }
  }
}

WindowedCharacter WindowedCharacter::zero(const Window& window) {
  return {window, {}, window.lo(), window.lo(), false, nullptr};
}

WindowedCharacter WindowedCharacter::monomial(std::int64_t k, const Window& window,
                                              BigInt coeff) {
  Terms t;
  t.emplace(k, std::move(coeff));
  return finite(t, window, t.begin()->second < 0);
}

WindowedCharacter WindowedCharacter::finite(const Terms& terms, const Window& window,
                                            bool is_virtual) {
  Terms nonzero;
  for (const auto& [k, c] : terms) {
    if (!c.is_zero()) nonzero.emplace(k, c);
  }
  if (nonzero.empty()) {
    auto z = zero(window);
    z.virtual_ = is_virtual;
    return z;
  }
  const auto lower = nonzero.begin()->first;
  const auto upper = nonzero.rbegin()->first;
  Terms stored;
  for (const auto& [k, c] : nonzero) {
    if (window.contains(k)) stored.emplace(k, c);
  }
  std::shared_ptr<const Regenerator> regen;
  if (lower < window.lo() || upper > window.hi()) {
    regen = std::make_shared<const Regenerator>(
        [nonzero, is_virtual](const Window& w) { return finite(nonzero, w, is_virtual); });
  }
  return {window, std::move(stored), lower, upper, is_virtual, std::move(regen)};
}

WindowedCharacter WindowedCharacter::from_window_data(const Window& window, const Terms& terms,
                                                      std::optional<std::int64_t> lower,
                                                      std::optional<std::int64_t> upper,
                                                      bool is_virtual) {
  for (const auto& [k, c] : terms) {
    if (c.is_zero()) continue;
    if (!window.contains(k)) {
      throw Error("term at weight " + weight_text(k) + " outside window [" +
                  weight_text(window.lo()) + "," + weight_text(window.hi()) + "]");
    }
    if ((lower && k < *lower) || (upper && k > *upper)) {
      throw Error("term at weight " + weight_text(k) + " violates declared support bound");
    }
  }
  return {window, terms, lower, upper, is_virtual, nullptr};
}

WindowedCharacter WindowedCharacter::constant_series(const BigInt& value, const Window& window) {
  if (value.is_zero()) return zero(window);
  Terms t;
  for (auto k = window.lo(); k <= window.hi(); ++k) t.emplace(k, value);
  auto regen = std::make_shared<const Regenerator>(
      [value](const Window& w) { return constant_series(value, w); });
  return {window, std::move(t), std::nullopt, std::nullopt, value < 0, std::move(regen)};
}

SupportKind WindowedCharacter::support_kind() const {
  if (lower_ && upper_) return SupportKind::finite;
  if (lower_) return SupportKind::bounded_below;
  if (upper_) return SupportKind::bounded_above;
  return SupportKind::unbounded;
}

bool WindowedCharacter::clipped() const {
  return is_finite() && (*lower_ < window_.lo() || *upper_ > window_.hi());
}

BigInt WindowedCharacter::coeff_at(Weight k) const {
  if (!window_.contains(k.value)) {
    throw Error("weight outside window: " + weight_text(k.value) + " not in [" +
                weight_text(window_.lo()) + "," + weight_text(window_.hi()) + "]");
  }
  const auto it = terms_.find(k.value);
  return it == terms_.end() ? BigInt(0) : it->second;
}

WindowedCharacter restrict_to(const WindowedCharacter& a, const Window& sub) {
  if (!a.window().contains(sub)) {
    throw Error("weight outside window: [" + weight_text(sub.lo()) + "," +
                weight_text(sub.hi()) + "] not inside [" + weight_text(a.window().lo()) +
                "," + weight_text(a.window().hi()) + "]");
  }
  return a.rewindow(sub);
}

WindowedCharacter WindowedCharacter::rewindow(const Window& w) const {
  if (w == window_) return *this;
  if (is_zero()) return with_virtual(zero(w), virtual_);
  if (regen_ && !window_.contains(w)) return (*regen_)(w);

  const bool below_known = w.lo() >= window_.lo() || (lower_ && *lower_ >= window_.lo());
  const bool above_known = w.hi() <= window_.hi() || (upper_ && *upper_ <= window_.hi());
  if (!below_known || !above_known) {
    throw Error("insufficient window: series known on [" + weight_text(window_.lo()) + "," +
                weight_text(window_.hi()) + "] cannot be evaluated on [" +
                weight_text(w.lo()) + "," + weight_text(w.hi()) + "]");
  }
  Terms t;
  for (auto it = terms_.lower_bound(w.lo()); it != terms_.end() && it->first <= w.hi(); ++it) {
    t.emplace(it->first, it->second);
  }
  auto regen = regen_;
  if (!regen && extendable()) {
    regen = std::make_shared<const Regenerator>(
        [self = *this](const Window& ww) { return self.rewindow(ww); });
  }
  return {w, std::move(t), lower_, upper_, virtual_, std::move(regen)};
}

WindowedCharacter WindowedCharacter::shifted(std::int64_t by) const {
  if (is_zero()) return with_virtual(zero(window_.shifted(by)), virtual_);
  Terms t;
  for (const auto& [k, c] : terms_) t.emplace(k + by, c);
  std::shared_ptr<const Regenerator> regen;
  if (regen_) {
    regen = std::make_shared<const Regenerator>(
        [r = regen_, by](const Window& w) { return (*r)(w.shifted(-by)).shifted(by); });
  }
  auto shift = [by](std::optional<std::int64_t> b) {
    return b ? std::optional<std::int64_t>(*b + by) : std::nullopt;
  };
  return {window_.shifted(by), std::move(t), shift(lower_), shift(upper_), virtual_,
          std::move(regen)};
}

kernels::DenseBlock WindowedCharacter::dense(std::int64_t first, std::int64_t last) const {
  kernels::DenseBlock block;
  block.first = first;
  if (last < first) return block;

  bool needs_regen = false;
  if (first < window_.lo()) {
    const auto top = std::min(last, window_.lo() - 1);
    if (!lower_ || *lower_ <= top) needs_regen = true;
  }
  if (last > window_.hi()) {
    const auto bottom = std::max(first, window_.hi() + 1);
    if (!upper_ || *upper_ >= bottom) needs_regen = true;
  }
  auto fill = [&](const Terms& terms) {
    block.coeffs.assign(static_cast<std::size_t>(last - first + 1), BigInt(0));
    for (auto it = terms.lower_bound(first); it != terms.end() && it->first <= last; ++it) {
      block.coeffs[static_cast<std::size_t>(it->first - first)] = it->second;
    }
  };
  if (needs_regen) {
    fill(rewindow(Window(first, last)).terms_);
  } else {
    fill(terms_);
  }
  return block;
}

std::string render_terms(const WindowedCharacter::Terms& terms) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms) {
    if (c.is_zero()) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.str();
    } else {
      if (mag != 1) out << mag.str() << '*';
      out << "u^" << k;
    }
  }
  if (first) return "0";
  return out.str();
}

std::string WindowedCharacter::render() const { return render_terms(terms_); }

bool WindowedCharacter::operator==(const WindowedCharacter& other) const {
  return window_ == other.window_ && terms_ == other.terms_ && lower_ == other.lower_ &&
         upper_ == other.upper_ && virtual_ == other.virtual_;
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  WindowedCharacter::Terms parse() {
    WindowedCharacter::Terms out;
    skip_ws();
    if (at_end()) fail("empty character");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [k, c] = term();
      out[k] += sign * c;
      skip_ws();
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

 private:
  std::pair<std::int64_t, BigInt> term() {
    BigInt coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = BigInt(digits());
      have_coeff = true;
      skip_ws();
      if (at_end() || peek() == '+' || peek() == '-') return {0, coeff};
      if (peek() == '*') {
        get();
        skip_ws();
      }
    }
    if (at_end() || peek() != 'u') fail(have_coeff ? "expected 'u'" : "expected term");
    get();
    skip_ws();
    std::int64_t k = 1;
    if (!at_end() && peek() == '^') {
      get();
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '-' || peek() == '+')) sign = get() == '-' ? -1 : 1;
      const auto exp = BigInt(digits());
      k = sign * checked_int64(exp);
    }
    return {k, coeff};
  }

  std::string digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) d.push_back(get());
    if (d.empty()) fail("expected digits");
    return d;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char get() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error("cannot parse character '" + std::string(text_) + "': " + what +
                " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

WindowedCharacter::Terms WindowedCharacter::parse_terms(std::string_view text) {
  return TermParser(text).parse();
}

WindowedCharacter WindowedCharacter::parse(std::string_view text, const Window& window,
                                           bool is_virtual) {
  return finite(parse_terms(text), window, is_virtual);
}

namespace {

/// A clipped finite result may carry loose bounds after cancellation;
/// evaluating it on the hull of its support makes them exact.
WindowedCharacter tighten(const WindowedCharacter& c) {
  if (!c.clipped() || !c.extendable()) return c;
  const Window hull(std::min(*c.lower_bound(), c.window().lo()),
                    std::max(*c.upper_bound(), c.window().hi()));
  return WindowedCharacter::finite(c.rewindow(hull).terms(), c.window(), c.is_virtual());
}

}  // namespace

WindowedCharacter add(const WindowedCharacter& a, const WindowedCharacter& b) {
  if (!(a.window_ == b.window_)) throw Error("window mismatch");
  if (b.is_zero()) return with_virtual(a, a.virtual_ || b.virtual_);
  if (a.is_zero()) return with_virtual(b, a.virtual_ || b.virtual_);
  auto terms = a.terms_;
  for (const auto& [k, c] : b.terms_) terms[k] += c;
  std::optional<std::int64_t> lower, upper;
  if (a.lower_ && b.lower_) lower = std::min(*a.lower_, *b.lower_);
  if (a.upper_ && b.upper_) upper = std::max(*a.upper_, *b.upper_);
  std::shared_ptr<const WindowedCharacter::Regenerator> regen;
  if (a.extendable() && b.extendable()) {
    regen = std::make_shared<const WindowedCharacter::Regenerator>(
        [a, b](const Window& w) { return add(a.rewindow(w), b.rewindow(w)); });
  }
  return tighten({a.window_, std::move(terms), lower, upper, a.virtual_ || b.virtual_,
                  std::move(regen)});
}

WindowedCharacter negate(const WindowedCharacter& a) {
  auto terms = a.terms_;
  for (auto& [k, c] : terms) c = -c;
  std::shared_ptr<const WindowedCharacter::Regenerator> regen;
  if (a.extendable()) {
    regen = std::make_shared<const WindowedCharacter::Regenerator>(
        [a](const Window& w) { return negate(a.rewindow(w)); });
  }
  return {a.window_, std::move(terms), a.lower_, a.upper_, true, std::move(regen)};
}

WindowedCharacter subtract(const WindowedCharacter& a, const WindowedCharacter& b) {
  return add(a, negate(b));
}

WindowedCharacter mul(const WindowedCharacter& a, const WindowedCharacter& b, Execution exec) {
  if (!(a.window_ == b.window_)) throw Error("window mismatch");
  const auto& window = a.window_;
  const bool is_virtual = a.virtual_ || b.virtual_;
  if (a.is_zero() || b.is_zero()) {
    auto z = WindowedCharacter::zero(window);
    z.virtual_ = is_virtual;
    return z;
  }
  const auto la = a.lower_, ua = a.upper_, lb = b.lower_, ub = b.upper_;
  // c_k = sum_i a_i b_{k-i}; i is bounded below by la or k - ub and above by
  // ua or k - lb. Without one of each the sum is infinite.
  if (!(la || ub) || !(ua || lb)) throw Error("divergent convolution");

  auto max_known = [](std::optional<std::int64_t> x, std::optional<std::int64_t> y) {
    return x && y ? std::max(*x, *y) : (x ? *x : *y);
  };
  auto min_known = [](std::optional<std::int64_t> x, std::optional<std::int64_t> y) {
    return x && y ? std::min(*x, *y) : (x ? *x : *y);
  };
  auto opt_sub = [](std::int64_t w, std::optional<std::int64_t> x) {
    return x ? std::optional<std::int64_t>(w - *x) : std::nullopt;
  };
  const auto ia_lo = max_known(la, opt_sub(window.lo(), ub));
  const auto ia_hi = min_known(ua, opt_sub(window.hi(), lb));
  const auto ib_lo = max_known(lb, opt_sub(window.lo(), ua));
  const auto ib_hi = min_known(ub, opt_sub(window.hi(), la));

  WindowedCharacter::Terms terms;
  if (ia_lo <= ia_hi && ib_lo <= ib_hi) {
    const auto da = a.dense(ia_lo, ia_hi);
    const auto db = b.dense(ib_lo, ib_hi);
    const auto product = kernels::convolve(da, db, window.lo(), window.hi(), exec);
    for (std::size_t i = 0; i < product.size(); ++i) {
      if (!product[i].is_zero()) terms.emplace(window.lo() + static_cast<std::int64_t>(i),
                                               product[i]);
    }
  }
  std::optional<std::int64_t> lower, upper;
  if (la && lb) lower = *la + *lb;
  if (ua && ub) upper = *ua + *ub;
  std::shared_ptr<const WindowedCharacter::Regenerator> regen;
  if (a.extendable() && b.extendable()) {
    regen = std::make_shared<const WindowedCharacter::Regenerator>(
        [a, b, exec](const Window& w) { return mul(a.rewindow(w), b.rewindow(w), exec); });
  }
  return tighten({window, std::move(terms), lower, upper, is_virtual, std::move(regen)});
}

WindowedCharacter sym_line_series(std::int64_t lambda, const Window& window) {
  if (lambda == 0) throw Error("zero isotropy weight");
  WindowedCharacter::Terms terms;
  // Multiples j * lambda, j >= 0, that land in the window.
  if (lambda > 0) {
    const auto start = window.lo() <= 0 ? std::int64_t{0}
                                        : (window.lo() + lambda - 1) / lambda * lambda;
    for (auto k = start; k <= window.hi(); k += lambda) terms.emplace(k, 1);
  } else {
    const auto step = -lambda;
    const auto start = window.hi() >= 0 ? std::int64_t{0}
                                        : -((-window.hi() + step - 1) / step * step);
    for (auto k = start; k >= window.lo(); k -= step) terms.emplace(k, 1);
  }
  auto lower = lambda > 0 ? std::optional<std::int64_t>(0) : std::nullopt;
  auto upper = lambda < 0 ? std::optional<std::int64_t>(0) : std::nullopt;
  auto regen = std::make_shared<const WindowedCharacter::Regenerator>(
      [lambda](const Window& w) { return sym_line_series(lambda, w); });
  return {window, std::move(terms), lower, upper, false, std::move(regen)};
}

}  // namespace equimorse
