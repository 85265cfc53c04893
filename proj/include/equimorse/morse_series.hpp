#pragma once

// Polynomials in the Morse variable t, over the character ring or over the
// integers after fixing a weight, and the decision procedure for
//   L = R + (1 + t) Q  with  Q >= 0.

#include "equimorse/character.hpp"
#include "equimorse/kernels.hpp"
#include "equimorse/types.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace equimorse {

/// Integer polynomial in t; coeffs[p] multiplies t^p.
class IntMorsePoly {
 public:
  IntMorsePoly() = default;
  explicit IntMorsePoly(std::vector<BigInt> coeffs);
  IntMorsePoly(std::initializer_list<std::int64_t> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  /// Coefficient of t^p (zero past the stored degree).
  BigInt operator[](std::size_t p) const;
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return degree() < 0; }

  /// `1 + 2*t + t^2`; the zero polynomial renders as `0`.
  std::string render() const;

  friend IntMorsePoly operator+(const IntMorsePoly& a, const IntMorsePoly& b);
  friend IntMorsePoly operator-(const IntMorsePoly& a, const IntMorsePoly& b);
  /// Equality ignores trailing zero coefficients.
  friend bool operator==(const IntMorsePoly& a, const IntMorsePoly& b);

 private:
  std::vector<BigInt> coeffs_;
};

/// (1 + t) * q.
IntMorsePoly times_one_plus_t(const IntMorsePoly& q);

/// Value at t = -1.
BigInt euler_eval(const IntMorsePoly& p);

struct Division {
  IntMorsePoly quotient;
  BigInt remainder;
};

/// p = (1 + t) * quotient + remainder, by synthetic division from the top degree.
Division div_one_plus_t(const IntMorsePoly& p);

struct RemainderWitness {
  BigInt value;
};

struct NegativeCoefficientWitness {
  int degree = 0;
  std::optional<Weight> weight;  // filled in by character-level comparisons
  BigInt value;
};

/// Fixed-point contributions that should vanish under the gap condition but do not.
struct FixedPointLeakWitness {
  IntMorsePoly fixed_point_terms;
};

using Witness = std::variant<RemainderWitness, NegativeCoefficientWitness, FixedPointLeakWitness>;

/// Outcome of a Morse comparison. Exactly one of quotient / witness is set.
struct Verdict {
  bool holds = false;
  std::optional<IntMorsePoly> quotient;
  std::optional<Witness> witness;

  static Verdict success(IntMorsePoly q);
  static Verdict failure(Witness w);
};

std::string describe(const Witness& w);

/// Decides L = R + (1 + t) Q with Q coefficientwise non-negative. On failure
/// the witness is the nonzero remainder, else the lowest-degree negative
/// quotient coefficient.
Verdict morse_compare(const IntMorsePoly& lhs, const IntMorsePoly& rhs);

/// Polynomial in t of degree <= max_degree with character coefficients, all on one window.
class MorseSeries {
 public:
  MorseSeries(int max_degree, const Window& window);

  int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Window& window() const { return window_; }
  const WindowedCharacter& coeff(int p) const;
  const std::vector<WindowedCharacter>& coeffs() const { return coeffs_; }

  /// Adds `c * t^p` to the series.
  void add_term(int p, const WindowedCharacter& c);

  /// Sum of two series of equal degree bound and window.
  friend MorseSeries operator+(const MorseSeries& a, const MorseSeries& b);

 private:
  Window window_;
  std::vector<WindowedCharacter> coeffs_;
};

/// Degree-p coefficient = multiplicity of weight k in coeff(p).
IntMorsePoly restrict_weight(const MorseSeries& s, Weight k);

struct WeightVerdict {
  Weight k;
  Verdict verdict;
};

struct CharacterVerdict {
  bool holds = false;
  std::vector<WeightVerdict> per_weight;  // ascending k
};

/// Runs morse_compare at every weight of `window` (which must lie inside both
/// series' windows); negative-coefficient witnesses carry the weight.
CharacterVerdict morse_compare_char(const MorseSeries& lhs, const MorseSeries& rhs,
                                    const Window& window, Execution exec = Execution::parallel);

}  // namespace equimorse
