#include "equimorse/oracle.hpp"

#include "equimorse/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace equimorse {

namespace {

void add_monomials(const std::vector<std::int64_t>& w, std::size_t index, std::int64_t remaining,
                   std::int64_t weight, WeightCounts& out) {
  if (index + 1 == w.size()) {
    out[weight + remaining * w[index]] += 1;
    return;
  }
  for (std::int64_t a = 0; a <= remaining; ++a) {
    add_monomials(w, index + 1, remaining - a, weight + a * w[index], out);
  }
}

void add_cech(const std::vector<std::int64_t>& w, std::size_t index, std::int64_t remaining,
              std::int64_t weight, WeightCounts& out) {
  const auto left = static_cast<std::int64_t>(w.size() - index - 1);
  if (left == 0) {
    if (remaining <= -1) out[weight + remaining * w[index]] += 1;
    return;
  }
  // Every later exponent needs at least -1 of the remaining total.
  for (std::int64_t a = -1; a >= remaining + left; --a) {
    add_cech(w, index + 1, remaining - a, weight + a * w[index], out);
  }
}

WindowedCharacter from_counts(const WeightCounts& counts, std::int64_t shift,
                              const Window& window, bool negate_weights = false) {
  WindowedCharacter::Terms terms;
  for (const auto& [k, c] : counts) terms[shift + (negate_weights ? -k : k)] += c;
  return WindowedCharacter::finite(terms, window);
}

}  // namespace

WeightCounts monomial_weights_serial(const std::vector<std::int64_t>& weights,
                                     std::int64_t degree) {
  WeightCounts out;
  if (degree < 0 || weights.empty()) return out;
  add_monomials(weights, 0, degree, 0, out);
  return out;
}

WeightCounts monomial_weights_parallel(const std::vector<std::int64_t>& weights,
                                       std::int64_t degree) {
  if (degree < 0 || weights.empty()) return {};
  if (weights.size() == 1) return monomial_weights_serial(weights, degree);
  // One slice per exponent of z_0; merged in order afterwards.
  std::vector<WeightCounts> slices(static_cast<std::size_t>(degree + 1));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t a0 = 0; a0 <= degree; ++a0) {
    add_monomials(weights, 1, degree - a0, a0 * weights[0], slices[static_cast<std::size_t>(a0)]);
  }
  WeightCounts out;
  for (const auto& slice : slices) {
    for (const auto& [k, c] : slice) out[k] += c;
  }
  return out;
}

WeightCounts cech_top_weights(const std::vector<std::int64_t>& weights, std::int64_t degree) {
  WeightCounts out;
  const auto vars = static_cast<std::int64_t>(weights.size());
  if (weights.empty() || degree > -vars) return out;
  add_cech(weights, 0, degree, 0, out);
  return out;
}

std::vector<WindowedCharacter> cpn_cohomology_character(const ProjectiveAction& act,
                                                        const Window& window, Execution exec) {
  if (act.n < 1 || act.weights.size() != static_cast<std::size_t>(act.n + 1)) {
    throw Error("projective action needs n >= 1 and n + 1 coordinate weights");
  }
  std::vector<WindowedCharacter> out(static_cast<std::size_t>(act.n + 1),
                                     WindowedCharacter::zero(window));
  if (act.d >= 0) {
    const auto counts = exec == Execution::parallel ? monomial_weights_parallel(act.weights, act.d)
                                                    : monomial_weights_serial(act.weights, act.d);
    out[0] = from_counts(counts, act.lift, window);
  }
  if (act.d <= -act.n - 1) {
    out[static_cast<std::size_t>(act.n)] =
        from_counts(cech_top_weights(act.weights, act.d), act.lift, window);
  }
  return out;
}

WindowedCharacter cpn_top_cohomology_dual(const ProjectiveAction& act, const Window& window) {
  const auto dual_degree = -act.d - act.n - 1;
  if (dual_degree < 0) return WindowedCharacter::zero(window);
  const auto total = std::accumulate(act.weights.begin(), act.weights.end(), std::int64_t{0});
  return from_counts(monomial_weights_serial(act.weights, dual_degree), act.lift - total, window,
                     /*negate_weights=*/true);
}

Scenario build_cpn_scenario(const ProjectiveAction& act, const Window& window,
                            const std::vector<Rational>& reduced_values,
                            const CpnScenarioOptions& options) {
  if (act.n < 1 || act.weights.size() != static_cast<std::size_t>(act.n + 1)) {
    throw Error("projective action needs n >= 1 and n + 1 coordinate weights");
  }
  if (std::set<std::int64_t>(act.weights.begin(), act.weights.end()).size() !=
      act.weights.size()) {
    throw Error("duplicate coordinate weights: fixed points would not be isolated");
  }
  if (options.mu_scale == Rational(0)) throw Error("mu_scale must be nonzero");

  Scenario s;
  s.name = options.name.empty() ? "cp" + std::to_string(act.n) + "_o" + std::to_string(act.d)
                                : options.name;
  s.n = act.n;
  s.window = window;
  s.prequantum = options.prequantum;
  s.provenance = "generated: CP^" + std::to_string(act.n) + ", O(" + std::to_string(act.d) +
                 "), lift " + std::to_string(act.lift);

  for (std::size_t i = 0; i < act.weights.size(); ++i) {
    FixedComponent f;
    f.id = "P" + std::to_string(i);
    f.mu = options.mu_scale * act.weights[i] + options.mu_offset;
    f.codim = act.n;
    f.dim_f = 0;
    for (std::size_t j = 0; j < act.weights.size(); ++j) {
      if (j != i) f.weights.push_back(act.weights[i] - act.weights[j]);
    }
    f.kind = IsolatedPoint{
        WindowedCharacter::monomial(act.d * act.weights[i] + act.lift, window)};
    s.components.push_back(std::move(f));
  }
  s.global_cohomology = cpn_cohomology_character(act, window);

  for (const auto& a : reduced_values) {
    require_regular(s, a);
    if (a < s.min_mu() || a > s.max_mu()) continue;
    if (act.n != 1) continue;  // reduced spaces of CP^n, n >= 2, are not generated
    if (std::abs(act.weights[1] - act.weights[0]) != 1) {
      throw Error("non-free action on the level set at a=" + to_string(a));
    }
    s.reduced.push_back(point_rule_table(a, 1, window));
  }
  return s;
}

WindowedCharacter atiyah_bott_euler(const ProjectiveAction& act, const Window& window,
                                    Execution exec) {
  const auto s = build_cpn_scenario(act, window, {});
  const auto values = kernels::sweep(window, exec, [&](std::int64_t k) {
    BigInt sum = 0;
    for (const auto& f : s.components) sum += index_value(f, Side::minus, Weight(k));
    return sum;
  });
  WindowedCharacter::Terms terms;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_zero()) terms.emplace(window.lo() + static_cast<std::int64_t>(i), values[i]);
  }
  return WindowedCharacter::from_window_data(window, terms, std::nullopt, std::nullopt, true);
}

WindowedCharacter oracle_euler_character(const ProjectiveAction& act, const Window& window) {
  const auto chars = cpn_cohomology_character(act, window, Execution::serial);
  WindowedCharacter::Terms terms;
  for (std::size_t p = 0; p < chars.size(); ++p) {
    for (const auto& [k, c] : chars[p].terms()) terms[k] += p % 2 == 0 ? c : BigInt(-c);
  }
  std::erase_if(terms, [](const auto& kv) { return kv.second.is_zero(); });
  return WindowedCharacter::from_window_data(window, terms, std::nullopt, std::nullopt, true);
}

std::int64_t cp1_line_cohomology_dim(int p, std::int64_t m) {
  if (p == 0) return std::max<std::int64_t>(m + 1, 0);
  if (p == 1) return std::max<std::int64_t>(-m - 1, 0);
  return 0;
}

Scenario build_cp2_line_scenario(std::int64_t d, std::int64_t lift, const Window& window,
                                 const std::vector<Rational>& reduced_values) {
  const ProjectiveAction act{2, {0, 0, 1}, d, lift};
  Scenario s;
  s.name = "cp2_line_o" + std::to_string(d);
  s.n = 2;
  s.window = window;
  s.provenance =
      "CP^2 with weights (0,0,1), O(" + std::to_string(d) + "), lift " + std::to_string(lift) +
      ". Line L = {z2 = 0} has normal bundle O(1) of weight -1, so K_L^+ (x) E = "
      "sum_j O(d+j+1) at weight c-j-1 and K_L^- (x) E = sum_j O(d-j) at weight c+j. "
      "Reduced space at 0 < a < 1 is CP^1 = {[z0:z1]} with E_a (x) F_a^k = O(d+c-k).";

  FixedComponent line;
  line.id = "L";
  line.mu = 0;
  line.codim = 1;
  line.dim_f = 1;
  line.weights = {-1};
  GeneralComponent g;
  g.fiber_support = {lift, lift};
  for (int p = 0; p <= 1; ++p) {
    WindowedCharacter::Terms plus, minus;
    for (auto k = window.lo(); k <= window.hi(); ++k) {
      // plus: weight k = c - j - 1, j >= 0; minus: weight k = c + j, j >= 0.
      if (const auto j = lift - 1 - k; j >= 0) {
        if (const auto dim = cp1_line_cohomology_dim(p, d + j + 1)) plus.emplace(k, dim);
      }
      if (const auto j = k - lift; j >= 0) {
        if (const auto dim = cp1_line_cohomology_dim(p, d - j)) minus.emplace(k, dim);
      }
    }
    g.plus.push_back(WindowedCharacter::from_window_data(window, plus, std::nullopt, std::nullopt));
    g.minus.push_back(
        WindowedCharacter::from_window_data(window, minus, std::nullopt, std::nullopt));
  }
  line.kind = std::move(g);
  s.components.push_back(std::move(line));

  FixedComponent point;
  point.id = "P";
  point.mu = 1;
  point.codim = 2;
  point.dim_f = 0;
  point.weights = {1, 1};
  point.kind = IsolatedPoint{WindowedCharacter::monomial(d + lift, window)};
  s.components.push_back(std::move(point));

  s.global_cohomology = cpn_cohomology_character(act, window);

  for (const auto& a : reduced_values) {
    require_regular(s, a);
    if (a < Rational(0) || a > Rational(1)) continue;
    ReducedSpaceTable t;
    t.a = a;
    for (int p = 0; p <= 1; ++p) {
      WindowedCharacter::Terms terms;
      for (auto k = window.lo(); k <= window.hi(); ++k) {
        if (const auto dim = cp1_line_cohomology_dim(p, d + lift - k)) terms.emplace(k, dim);
      }
      t.dims.push_back(
          WindowedCharacter::from_window_data(window, terms, std::nullopt, std::nullopt));
    }
    s.reduced.push_back(std::move(t));
  }
  return s;
}

}  // namespace equimorse
