#pragma once

// Data model of a verification instance: fixed components of the circle
// action with their isotropy data, reduced-space cohomology tables and the
// global cohomology characters of the bundle.
//
// Sign convention: isotropy weights are the weights of the circle on the
// holomorphic tangent (normal) directions, so at a local minimum of the
// moment map every isotropy weight is negative.

#include "equimorse/character.hpp"
#include "equimorse/morse_series.hpp"
#include "equimorse/types.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace equimorse {

/// Which polarized symmetric product: plus = S((N+)^*) (x) S(N-) (x) det N-,
/// minus = S((N-)^*) (x) S(N+) (x) det N+.
enum class Side { plus, minus };

std::string to_string(Side side);
Side parse_side(std::string_view text);

/// Isolated fixed point; the fiber character ch(E_p) is finite.
struct IsolatedPoint {
  WindowedCharacter fiber_char;
};

/// Positive-dimensional fixed component with user-supplied cohomology
/// characters ch H^p(F, O(K_F^side (x) E|_F)), p = 0..dim F.
struct GeneralComponent {
  std::pair<std::int64_t, std::int64_t> fiber_support;  // declared [k1, k2] of ch(E|_F)
  std::vector<WindowedCharacter> plus;
  std::vector<WindowedCharacter> minus;
};

struct FixedComponent {
  std::string id;
  Rational mu;
  int codim = 0;  // n_F, complex codimension
  int dim_f = 0;  // complex dimension of F
  std::vector<std::int64_t> weights;
  std::variant<IsolatedPoint, GeneralComponent> kind{GeneralComponent{}};

  bool is_point() const { return std::holds_alternative<IsolatedPoint>(kind); }
  /// Number of negative isotropy weights.
  int nu() const;
  /// Sum of the positive weights (>= 0).
  std::int64_t lambda_plus() const;
  /// Sum of the negative weights (<= 0).
  std::int64_t lambda_minus() const;
  /// [k1, k2] with supp ch(E|_F) inside it; empty when the fiber is zero.
  std::optional<std::pair<std::int64_t, std::int64_t>> fiber_support() const;
};

/// Cohomology of the reduced space at a regular value a.
struct ReducedSpaceTable {
  Rational a;
  /// dims[p] has coefficient dim H^p(M_a, O(E_a (x) F_a^k)) at u^k, p = 0..n-1.
  std::vector<WindowedCharacter> dims;
  /// Set when the table comes from the point rule (n = 1, M_a a point).
  std::optional<BigInt> rank_rule;
  /// The level set is declared empty; all dims vanish.
  bool empty = false;
};

struct Scenario {
  std::string name;
  int n = 0;
  Window window{0, 0};
  bool prequantum = false;
  std::string provenance;
  std::vector<FixedComponent> components;
  std::vector<ReducedSpaceTable> reduced;
  /// ch H^p(M, O(E)) for p = 0..n; absent when unknown.
  std::optional<std::vector<WindowedCharacter>> global_cohomology;

  const FixedComponent& component(std::string_view id) const;
  const ReducedSpaceTable* reduced_at(const Rational& a) const;
  Rational min_mu() const;
  Rational max_mu() const;
};

/// ch H^p(F, O(K_F^side (x) E|_F)) on `window`. Isolated points are computed
/// from the fiber and isotropy weights (only p = 0 is nonzero); general
/// components return the stored character.
WindowedCharacter polarized_char(const FixedComponent& f, Side side, const Window& window,
                                 int p = 0, Execution exec = Execution::parallel);

/// Checks the support bounds: side plus lives in (-inf, k2 - |lambda^-|],
/// side minus in [k1 + lambda^+, inf).
bool supp_bounds_check(const FixedComponent& f, const Window& window);

/// Degree shift of the component's Morse term: nu for plus, n_F - nu for minus.
int morse_shift(const FixedComponent& f, Side side);

/// sum_p t^{p + shift} ch H^p(F, O(K_F^side (x) E|_F)), as a series of degree <= dim M.
MorseSeries morse_term(const FixedComponent& f, Side side, const Window& window,
                       Execution exec = Execution::parallel);

/// Rank-rule table for n = 1: M_a is a point, dim H^0 = rank E for every k.
ReducedSpaceTable point_rule_table(const Rational& a, const BigInt& rank, const Window& window);
ReducedSpaceTable empty_table(const Rational& a, int n, const Window& window);

/// Every violated condition, one message per violation; empty when valid.
std::vector<std::string> validate_scenario(const Scenario& s);

/// Scenario for E (x) F^m: every character multiplied by u^{-m}, reduced
/// tables reindexed dims(p, k) <- dims(p, k + m).
Scenario twist_by_F_power(const Scenario& s, std::int64_t m);

/// Replaces the window (which must lie inside the current one, or be
/// reachable by regeneration for all data).
Scenario with_window(const Scenario& s, const Window& window);

}  // namespace equimorse
