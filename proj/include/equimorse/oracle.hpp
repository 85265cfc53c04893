#pragma once

// Brute-force ground truth on projective spaces. CP^n carries the circle
// action t.[z_0 : ... : z_n] with coordinate weights w_i; the bundle O(d) is
// lifted so that the section z^a has weight c + sum_i a_i w_i.

#include "equimorse/kernels.hpp"
#include "equimorse/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace equimorse {

struct ProjectiveAction {
  int n = 1;
  std::vector<std::int64_t> weights;  // w_0..w_n
  std::int64_t d = 0;                 // degree of O(d)
  std::int64_t lift = 0;              // c
};

/// Weight histogram: weight -> number of monomials.
using WeightCounts = std::map<std::int64_t, BigInt>;

/// Histogram of sum_i a_i w_i over a_i >= 0 with sum a_i = degree.
WeightCounts monomial_weights_serial(const std::vector<std::int64_t>& weights,
                                     std::int64_t degree);
WeightCounts monomial_weights_parallel(const std::vector<std::int64_t>& weights,
                                       std::int64_t degree);

/// Histogram of sum_i a_i w_i over Cech monomials a_i <= -1 with sum a_i = degree.
WeightCounts cech_top_weights(const std::vector<std::int64_t>& weights, std::int64_t degree);

/// ch H^p(CP^n, O(d)) for p = 0..n. H^0 from monomials, H^n from Cech
/// monomials with all exponents negative, everything else zero.
std::vector<WindowedCharacter> cpn_cohomology_character(const ProjectiveAction& act,
                                                        const Window& window,
                                                        Execution exec = Execution::parallel);

/// H^n via Serre duality: monomials of O(-d-n-1), weights negated and shifted
/// by c - sum w_i. Kept separate from the Cech route as a self-check.
WindowedCharacter cpn_top_cohomology_dual(const ProjectiveAction& act, const Window& window);

struct CpnScenarioOptions {
  std::string name;
  /// mu(P_i) = mu_scale * w_i + mu_offset. A negative scale flips the
  /// moment map relative to the isotropy weights.
  Rational mu_scale{1};
  Rational mu_offset{0};
  bool prequantum = false;
};

/// Isolated fixed points P_i with isotropy weights {w_i - w_j : j != i} and
/// fiber u^{d w_i + c}; global cohomology from the monomial oracle. For n = 1
/// and a free action, every listed interior regular value gets the point-rule
/// reduced table.
Scenario build_cpn_scenario(const ProjectiveAction& act, const Window& window,
                            const std::vector<Rational>& reduced_values,
                            const CpnScenarioOptions& options = {});

/// sum_k u^k sum_F index_value(F, -, k): the equivariant Euler characteristic
/// as a sum over fixed points.
WindowedCharacter atiyah_bott_euler(const ProjectiveAction& act, const Window& window,
                                    Execution exec = Execution::parallel);

/// sum_p (-1)^p ch H^p(CP^n, O(d)) straight from the monomial oracle.
WindowedCharacter oracle_euler_character(const ProjectiveAction& act, const Window& window);

/// dim H^p(CP^1, O(m)).
std::int64_t cp1_line_cohomology_dim(int p, std::int64_t m);

/// CP^2 with coordinate weights (0, 0, 1): the fixed set is the line
/// {z_2 = 0} (a positive-dimensional component, mu = 0) and the point
/// [0:0:1] (mu = 1). Line cohomology is computed from h^p(CP^1, O(m)); the
/// reduced space at 0 < a < 1 is CP^1 with E_a (x) F_a^k = O(d + c - k).
Scenario build_cp2_line_scenario(std::int64_t d, std::int64_t lift, const Window& window,
                                 const std::vector<Rational>& reduced_values);

}  // namespace equimorse
