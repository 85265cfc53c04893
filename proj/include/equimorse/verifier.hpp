#pragma once

// Assembles both sides of the holomorphic Morse inequality for a circle
// action from a Scenario, and all of its corollaries:
//
//   sum_p t^p dim H^p(M_a, E_a (x) F_a^k)
//     + sum_{mu(F) > a} t^{n_F - nu_F} sum_p t^p mult_k H^p(F, K_F^- (x) E|_F)
//     + sum_{mu(F) < a} t^{nu_F}       sum_p t^p mult_k H^p(F, K_F^+ (x) E|_F)
//   = sum_p t^p mult_k H^p(M, E) + (1 + t) Q_k(t),   Q_k >= 0.

#include "equimorse/kernels.hpp"
#include "equimorse/model.hpp"
#include "equimorse/morse_series.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace equimorse {

/// Result of one Morse comparison at weight k. When the scenario carries no
/// global cohomology only the left side is reported.
struct MorseCheck {
  Weight k;
  IntMorsePoly lhs;
  std::optional<IntMorsePoly> rhs;
  std::optional<Verdict> verdict;

  bool holds() const { return verdict && verdict->holds; }
};

/// Exact integer identity (the t = -1 specializations).
struct IdentityCheck {
  Weight k;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

struct GapCheck {
  Weight k;
  bool holds = false;
};

/// A weight at which a precondition failed (e.g. the gap condition).
struct ErrorEntry {
  Weight k;
  std::string error;
};

/// Throws "not a regular value" when a equals mu(F) for some component.
void require_regular(const Scenario& s, const Rational& a);

/// The reduced-space term sum_p t^p (sum_k dims(p, k) u^k). Empty level sets
/// (a outside the moment image, or declared empty) give zero.
MorseSeries reduced_series(const Scenario& s, const Rational& a, const Window& window);

/// Fixed-point part of the left side: minus-side terms above a, plus-side below.
MorseSeries fixed_point_series(const Scenario& s, const Rational& a, const Window& window,
                               Execution exec = Execution::parallel);

MorseSeries assemble_lhs(const Scenario& s, const Rational& a, const Window& window,
                         Execution exec = Execution::parallel);

/// sum_p t^p ch H^p(M, E). Throws when the scenario has no global cohomology.
MorseSeries assemble_rhs(const Scenario& s, const Window& window);

MorseCheck verify_morse(const Scenario& s, const Rational& a, Weight k);
std::vector<MorseCheck> verify_morse_range(const Scenario& s, const Rational& a,
                                           const Window& ks,
                                           Execution exec = Execution::parallel);

/// A regular value below the whole moment image (min mu - 1).
Rational below_min(const Scenario& s);

MorseCheck verify_wu_zhang(const Scenario& s, Weight k);
std::vector<MorseCheck> verify_wu_zhang_range(const Scenario& s, const Window& ks,
                                              Execution exec = Execution::parallel);

/// True iff k > k2(F) - |lambda^-_F| for every F below a and
/// k < k1(F) + lambda^+_F for every F above a.
bool gap_condition(const Scenario& s, const Rational& a, Weight k);

/// Reduced term alone against the global side. Throws "gap condition fails"
/// when the precondition does not hold.
MorseCheck verify_tz(const Scenario& s, const Rational& a, Weight k);

/// Index contribution of F at t = -1:
/// (-1)^shift sum_p (-1)^p mult_k H^p(F, K_F^side (x) E|_F).
BigInt index_value(const FixedComponent& f, Side side, Weight k);

IdentityCheck index_identity(const Scenario& s, const Rational& a, Weight k);

/// Compares the change of reduced Euler characteristics from a to b with the
/// index contributions of the components strictly between them.
IdentityCheck relative_index(const Scenario& s, const Rational& a, const Rational& b, Weight k);

}  // namespace equimorse
