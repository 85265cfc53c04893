#pragma once

// Formal characters of the circle group. The weight-k irreducible is written
// u^k with u = e^{-i theta}; a character is a Laurent series in u.
//
// A WindowedCharacter stores the coefficients of such a series exactly on a
// finite weight window, together with sound support bounds: a lower bound b
// means no nonzero coefficient sits below b. Both bounds known = finite
// support. Series that know how to rebuild themselves on a wider window
// (geometric series, finite characters, products of those) carry a
// regenerator, so products stay exact on the whole window instead of
// degrading near its edges.

#include "equimorse/kernels.hpp"
#include "equimorse/types.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace equimorse {

enum class SupportKind { finite, bounded_below, bounded_above, unbounded };

std::string to_string(SupportKind kind);

class WindowedCharacter {
 public:
  using Terms = std::map<std::int64_t, BigInt>;
  using Regenerator = std::function<WindowedCharacter(const Window&)>;

  /// The zero character (finite, unclipped).
  static WindowedCharacter zero(const Window& window);

  /// coeff * u^k.
  static WindowedCharacter monomial(std::int64_t k, const Window& window, BigInt coeff = 1);

  /// A finite character given by its complete term list. Terms outside the
  /// window are dropped from storage (the result is then clipped) but remain
  /// recoverable through rewindow().
  static WindowedCharacter finite(const Terms& terms, const Window& window,
                                  bool is_virtual = false);

  /// Series known only on `window`. Terms must lie inside the window; the
  /// bounds are trusted support bounds (checked against the stored terms).
  static WindowedCharacter from_window_data(const Window& window, const Terms& terms,
                                            std::optional<std::int64_t> lower,
                                            std::optional<std::int64_t> upper,
                                            bool is_virtual = false);

  /// value * sum over all k of u^k: the same coefficient at every weight.
  static WindowedCharacter constant_series(const BigInt& value, const Window& window);

  /// Parses the canonical text form (`3*u^-2 + 1 + 2*u^5`) into a finite character.
  static WindowedCharacter parse(std::string_view text, const Window& window,
                                 bool is_virtual = false);
  static Terms parse_terms(std::string_view text);

  const Window& window() const { return window_; }
  /// Nonzero coefficients inside the window, ascending weight.
  const Terms& terms() const { return terms_; }

  std::optional<std::int64_t> lower_bound() const { return lower_; }
  std::optional<std::int64_t> upper_bound() const { return upper_; }
  SupportKind support_kind() const;
  bool is_finite() const { return lower_ && upper_; }
  /// Finite, but nonzero terms may exist outside the window.
  bool clipped() const;
  bool is_virtual() const { return virtual_; }
  bool is_zero() const { return is_finite() && !clipped() && terms_.empty(); }
  /// True when the series can be evaluated exactly on any window.
  bool extendable() const { return regen_ != nullptr || (is_finite() && !clipped()); }

  /// Exact coefficient of u^k. Throws for k outside the window.
  BigInt coeff_at(Weight k) const;

  /// The same series on another window. Throws "insufficient window" when
  /// the new window needs coefficients that are not known.
  WindowedCharacter rewindow(const Window& window) const;

  /// The series multiplied by u^by, with the window moved along with it
  /// (never needs regeneration).
  WindowedCharacter shifted(std::int64_t by) const;

  /// Dense coefficients on [first, last]; zero outside the support bounds.
  kernels::DenseBlock dense(std::int64_t first, std::int64_t last) const;

  /// Canonical text rendering of the in-window terms.
  std::string render() const;

  bool operator==(const WindowedCharacter& other) const;

  friend WindowedCharacter add(const WindowedCharacter& a, const WindowedCharacter& b);
  friend WindowedCharacter negate(const WindowedCharacter& a);
  friend WindowedCharacter mul(const WindowedCharacter& a, const WindowedCharacter& b,
                               Execution exec);
  friend WindowedCharacter sym_line_series(std::int64_t lambda, const Window& window);
  friend WindowedCharacter with_virtual(WindowedCharacter c, bool is_virtual);

 private:
  WindowedCharacter(Window window, Terms terms, std::optional<std::int64_t> lower,
                    std::optional<std::int64_t> upper, bool is_virtual,
                    std::shared_ptr<const Regenerator> regen);

  void normalize();
  void check_invariants() const;

  Window window_;
  Terms terms_;
  std::optional<std::int64_t> lower_;
  std::optional<std::int64_t> upper_;
  bool virtual_ = false;
  std::shared_ptr<const Regenerator> regen_;
};

WindowedCharacter add(const WindowedCharacter& a, const WindowedCharacter& b);
WindowedCharacter negate(const WindowedCharacter& a);
WindowedCharacter subtract(const WindowedCharacter& a, const WindowedCharacter& b);

/// Exact product on the common window. Requires every in-window coefficient
/// to be a finite sum; a series bounded below times one bounded above is
/// rejected with "divergent convolution".
WindowedCharacter mul(const WindowedCharacter& a, const WindowedCharacter& b,
                      Execution exec = Execution::parallel);

/// Character of the symmetric algebra of a line of weight lambda:
/// sum_{j >= 0} u^{j * lambda}.
WindowedCharacter sym_line_series(std::int64_t lambda, const Window& window);

/// Coefficientwise restriction to `sub`, which must lie inside a.window().
WindowedCharacter restrict_to(const WindowedCharacter& a, const Window& sub);

/// Canonical text for a term map (shared by characters and reports).
std::string render_terms(const WindowedCharacter::Terms& terms);

}  // namespace equimorse
