#include "equimorse/model.hpp"

#include <algorithm>
#include <set>

namespace equimorse {

std::string to_string(Side side) { return side == Side::plus ? "+" : "-"; }

Side parse_side(std::string_view text) {
  if (text == "+" || text == "plus") return Side::plus;
  if (text == "-" || text == "minus") return Side::minus;
  throw Error("invalid side '" + std::string(text) + "' (expected + or -)");
}

int FixedComponent::nu() const {
  return static_cast<int>(std::count_if(weights.begin(), weights.end(),
                                        [](std::int64_t w) { return w < 0; }));
}

std::int64_t FixedComponent::lambda_plus() const {
  std::int64_t s = 0;
  for (auto w : weights) {
    if (w > 0) s += w;
  }
  return s;
}

std::int64_t FixedComponent::lambda_minus() const {
  std::int64_t s = 0;
  for (auto w : weights) {
    if (w < 0) s += w;
  }
  return s;
}

std::optional<std::pair<std::int64_t, std::int64_t>> FixedComponent::fiber_support() const {
  if (const auto* g = std::get_if<GeneralComponent>(&kind)) return g->fiber_support;
  const auto& fiber = std::get<IsolatedPoint>(kind).fiber_char;
  if (fiber.is_zero()) return std::nullopt;
  return std::make_pair(*fiber.lower_bound(), *fiber.upper_bound());
}

const FixedComponent& Scenario::component(std::string_view id) const {
  for (const auto& c : components) {
    if (c.id == id) return c;
  }
  throw Error("no fixed component with id '" + std::string(id) + "'");
}

const ReducedSpaceTable* Scenario::reduced_at(const Rational& a) const {
  for (const auto& t : reduced) {
    if (t.a == a) return &t;
  }
  return nullptr;
}

Rational Scenario::min_mu() const {
  if (components.empty()) throw Error("scenario has no fixed components");
  auto m = components.front().mu;
  for (const auto& c : components) m = std::min(m, c.mu);
  return m;
}

Rational Scenario::max_mu() const {
  if (components.empty()) throw Error("scenario has no fixed components");
  auto m = components.front().mu;
  for (const auto& c : components) m = std::max(m, c.mu);
  return m;
}

WindowedCharacter polarized_char(const FixedComponent& f, Side side, const Window& window,
                                 int p, Execution exec) {
  if (p < 0 || p > f.dim_f) {
    throw Error("cohomology degree " + std::to_string(p) + " out of range for F=" + f.id);
  }
  if (const auto* g = std::get_if<GeneralComponent>(&f.kind)) {
    const auto& table = side == Side::plus ? g->plus : g->minus;
    if (static_cast<std::size_t>(p) >= table.size()) {
      throw Error("missing cohomology character (" + to_string(side) + ", p=" +
                  std::to_string(p) + ") for F=" + f.id);
    }
    return table[static_cast<std::size_t>(p)].rewindow(window);
  }
  // H^p of a point vanishes for p > 0.
  if (p > 0) return WindowedCharacter::zero(window);

  const auto& fiber = std::get<IsolatedPoint>(f.kind).fiber_char;
  // Duals negate weights; det contributes the monomial of the weight sum.
  const auto det_shift = side == Side::plus ? f.lambda_minus() : f.lambda_plus();
  auto result = mul(fiber.rewindow(window), WindowedCharacter::monomial(det_shift, window), exec);
  for (auto w : f.weights) {
    if (w == 0) throw Error("zero isotropy weight: F=" + f.id);
    const bool positive = w > 0;
    const bool dualized = (side == Side::plus) == positive;
    result = mul(result, sym_line_series(dualized ? -w : w, window), exec);
  }
  return result;
}

bool supp_bounds_check(const FixedComponent& f, const Window& window) {
  const auto support = f.fiber_support();
  if (!support) return true;
  const auto plus_bound = support->second + f.lambda_minus();
  const auto minus_bound = support->first + f.lambda_plus();
  for (int p = 0; p <= f.dim_f; ++p) {
    const auto plus = polarized_char(f, Side::plus, window, p);
    if (!plus.terms().empty() && plus.terms().rbegin()->first > plus_bound) return false;
    const auto minus = polarized_char(f, Side::minus, window, p);
    if (!minus.terms().empty() && minus.terms().begin()->first < minus_bound) return false;
  }
  return true;
}

int morse_shift(const FixedComponent& f, Side side) {
  return side == Side::plus ? f.nu() : f.codim - f.nu();
}

MorseSeries morse_term(const FixedComponent& f, Side side, const Window& window, Execution exec) {
  MorseSeries out(f.codim + f.dim_f, window);
  const int shift = morse_shift(f, side);
  for (int p = 0; p <= f.dim_f; ++p) {
    out.add_term(p + shift, polarized_char(f, side, window, p, exec));
  }
  return out;
}

ReducedSpaceTable point_rule_table(const Rational& a, const BigInt& rank, const Window& window) {
  ReducedSpaceTable t;
  t.a = a;
  t.dims.push_back(WindowedCharacter::constant_series(rank, window));
  t.rank_rule = rank;
  return t;
}

ReducedSpaceTable empty_table(const Rational& a, int n, const Window& window) {
  ReducedSpaceTable t;
  t.a = a;
  t.empty = true;
  t.dims.assign(static_cast<std::size_t>(std::max(n, 1)), WindowedCharacter::zero(window));
  return t;
}

namespace {

bool structurally_valid(const FixedComponent& c, int n, const Window& window,
                        std::vector<std::string>& out) {
  const auto before = out.size();
  const auto tag = ": F=" + c.id;
  if (c.codim < 1) out.push_back("codimension must be positive" + tag);
  if (c.dim_f < 0) out.push_back("negative dimension" + tag);
  if (c.codim + c.dim_f != n) out.push_back("dimension mismatch (codim + dim != n)" + tag);
  if (static_cast<int>(c.weights.size()) != c.codim) {
    out.push_back("isotropy weight count mismatch" + tag);
  }
  if (std::find(c.weights.begin(), c.weights.end(), 0) != c.weights.end()) {
    out.push_back("zero isotropy weight" + tag);
  }
  if (const auto* pt = std::get_if<IsolatedPoint>(&c.kind)) {
    if (c.dim_f != 0) out.push_back("isolated point with positive dimension" + tag);
    if (!(pt->fiber_char.window() == window)) out.push_back("window mismatch" + tag);
    if (!pt->fiber_char.is_finite()) out.push_back("fiber character must be finite" + tag);
  } else {
    const auto& g = std::get<GeneralComponent>(c.kind);
    const auto expected = static_cast<std::size_t>(std::max(c.dim_f, 0) + 1);
    if (g.plus.size() != expected || g.minus.size() != expected) {
      out.push_back("cohomology table size mismatch" + tag);
    }
    if (g.fiber_support.first > g.fiber_support.second) {
      out.push_back("invalid fiber support" + tag);
    }
    for (const auto* table : {&g.plus, &g.minus}) {
      for (const auto& ch : *table) {
        if (!(ch.window() == window)) {
          out.push_back("window mismatch" + tag);
          break;
        }
      }
    }
  }
  return out.size() == before;
}

}  // namespace

std::vector<std::string> validate_scenario(const Scenario& s) {
  std::vector<std::string> out;
  if (s.n < 1) out.push_back("dimension n must be positive");
  if (s.components.empty()) out.push_back("scenario has no fixed components");

  std::set<std::string> ids;
  for (const auto& c : s.components) {
    if (!ids.insert(c.id).second) out.push_back("duplicate component id: F=" + c.id);
    if (!structurally_valid(c, s.n, s.window, out)) continue;
    if (!supp_bounds_check(c, s.window)) out.push_back("support bound violated: F=" + c.id);
    if (s.prequantum) {
      // Kostant lift: the weights on E|_F have the sign of mu(F).
      const auto support = c.fiber_support();
      const bool ok = support && ((c.mu > Rational(0) && support->first > 0) ||
                                  (c.mu < Rational(0) && support->second < 0));
      if (!ok) out.push_back("prequantum sign violated: F=" + c.id);
    }
  }

  std::set<Rational> seen;
  for (const auto& t : s.reduced) {
    const auto tag = ": a=" + to_string(t.a);
    if (!seen.insert(t.a).second) out.push_back("duplicate reduced table" + tag);
    for (const auto& c : s.components) {
      if (c.mu == t.a) {
        out.push_back("not a regular value" + tag + " equals mu(" + c.id + ")");
        break;
      }
    }
    if (t.dims.size() != static_cast<std::size_t>(s.n)) {
      out.push_back("reduced table size mismatch" + tag);
    }
    if (t.rank_rule && s.n != 1) out.push_back("rank rule requires n = 1" + tag);
    for (const auto& d : t.dims) {
      if (!(d.window() == s.window)) {
        out.push_back("window mismatch" + tag);
        break;
      }
    }
    if (!s.components.empty() && (t.a < s.min_mu() || t.a > s.max_mu())) {
      const bool all_zero = std::all_of(t.dims.begin(), t.dims.end(),
                                        [](const auto& d) { return d.is_zero(); });
      if (!all_zero) out.push_back("nonzero reduced table outside the moment image" + tag);
    }
  }

  if (s.global_cohomology) {
    if (s.global_cohomology->size() != static_cast<std::size_t>(s.n + 1)) {
      out.push_back("global cohomology size mismatch");
    }
    for (const auto& ch : *s.global_cohomology) {
      if (!(ch.window() == s.window)) {
        out.push_back("window mismatch: global cohomology");
        break;
      }
      if (!ch.is_finite() || ch.clipped()) {
        out.push_back("global cohomology must be finite within the window");
        break;
      }
    }
  }
  return out;
}

namespace {

WindowedCharacter twist_finite(const WindowedCharacter& c, std::int64_t m, const Window& window,
                               const std::string& what) {
  const auto shifted = c.shifted(-m);
  if (!c.is_zero() && (*shifted.lower_bound() < window.lo() || *shifted.upper_bound() > window.hi())) {
    throw Error("window overflow: twisting " + what + " by F^" + std::to_string(m) +
                " leaves the window");
  }
  return shifted.rewindow(window);
}

}  // namespace

Scenario twist_by_F_power(const Scenario& s, std::int64_t m) {
  if (m == 0) return s;
  // F has fiber weight -1, so tensoring with F^m multiplies characters by u^{-m}.
  bool all_extendable = true;
  for (const auto& c : s.components) {
    if (const auto* g = std::get_if<GeneralComponent>(&c.kind)) {
      for (const auto* table : {&g->plus, &g->minus}) {
        for (const auto& ch : *table) all_extendable = all_extendable && ch.extendable();
      }
    }
  }
  for (const auto& t : s.reduced) {
    for (const auto& d : t.dims) all_extendable = all_extendable && d.extendable();
  }
  Window window = s.window;
  if (!all_extendable) {
    const auto common = s.window.intersect(s.window.shifted(-m));
    if (!common) throw Error("window overflow: twist by F^" + std::to_string(m));
    window = *common;
  }
  auto move = [&](const WindowedCharacter& c) { return c.shifted(-m).rewindow(window); };

  Scenario out = s;
  out.window = window;
  for (auto& c : out.components) {
    if (auto* pt = std::get_if<IsolatedPoint>(&c.kind)) {
      pt->fiber_char = twist_finite(pt->fiber_char, m, window, "fiber of F=" + c.id);
    } else {
      auto& g = std::get<GeneralComponent>(c.kind);
      g.fiber_support = {g.fiber_support.first - m, g.fiber_support.second - m};
      for (auto* table : {&g.plus, &g.minus}) {
        for (auto& ch : *table) ch = move(ch);
      }
    }
  }
  for (auto& t : out.reduced) {
    for (auto& d : t.dims) d = move(d);
  }
  if (out.global_cohomology) {
    for (auto& ch : *out.global_cohomology) ch = twist_finite(ch, m, window, "global cohomology");
  }
  return out;
}

Scenario with_window(const Scenario& s, const Window& window) {
  if (window == s.window) return s;
  Scenario out = s;
  out.window = window;
  for (auto& c : out.components) {
    if (auto* pt = std::get_if<IsolatedPoint>(&c.kind)) {
      pt->fiber_char = pt->fiber_char.rewindow(window);
    } else {
      auto& g = std::get<GeneralComponent>(c.kind);
      for (auto* table : {&g.plus, &g.minus}) {
        for (auto& ch : *table) ch = ch.rewindow(window);
      }
    }
  }
  for (auto& t : out.reduced) {
    for (auto& d : t.dims) d = d.rewindow(window);
  }
  if (out.global_cohomology) {
    for (auto& ch : *out.global_cohomology) ch = ch.rewindow(window);
  }
  return out;
}

}  // namespace equimorse
