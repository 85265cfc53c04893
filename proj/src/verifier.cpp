#include "equimorse/verifier.hpp"

namespace equimorse {

namespace {

void require_in_window(const Scenario& s, const Window& ks) {
  if (!s.window.contains(ks)) {
    throw Error("weight outside window: [" + std::to_string(ks.lo()) + "," +
                std::to_string(ks.hi()) + "] not inside [" + std::to_string(s.window.lo()) +
                "," + std::to_string(s.window.hi()) + "]");
  }
}

BigInt alternating_sum(const IntMorsePoly& p) { return euler_eval(p); }

std::vector<MorseCheck> compare_range(const MorseSeries& lhs, const std::optional<MorseSeries>& rhs,
                                      const Window& ks, Execution exec) {
  return kernels::sweep(ks, exec, [&](std::int64_t kv) {
    const Weight k(kv);
    MorseCheck check{k, restrict_weight(lhs, k), std::nullopt, std::nullopt};
    if (rhs) {
      check.rhs = restrict_weight(*rhs, k);
      auto v = morse_compare(check.lhs, *check.rhs);
      if (v.witness) {
        if (auto* neg = std::get_if<NegativeCoefficientWitness>(&*v.witness)) neg->weight = k;
      }
      check.verdict = std::move(v);
    }
    return check;
  });
}

/// Euler characteristic of the reduced term at weight k.
BigInt reduced_euler(const Scenario& s, const Rational& a, Weight k) {
  return alternating_sum(restrict_weight(reduced_series(s, a, Window(k.value, k.value)), k));
}

BigInt global_euler(const Scenario& s, Weight k) {
  return alternating_sum(restrict_weight(assemble_rhs(s, Window(k.value, k.value)), k));
}

}  // namespace

void require_regular(const Scenario& s, const Rational& a) {
  for (const auto& c : s.components) {
    if (c.mu == a) {
      throw Error("not a regular value: a=" + to_string(a) + " equals mu(" + c.id + ")");
    }
  }
}

MorseSeries reduced_series(const Scenario& s, const Rational& a, const Window& window) {
  require_regular(s, a);
  MorseSeries out(s.n, window);
  if (a < s.min_mu() || a > s.max_mu()) return out;
  const auto* table = s.reduced_at(a);
  if (!table) throw Error("missing reduced table at a=" + to_string(a));
  if (table->empty) return out;
  if (table->dims.size() != static_cast<std::size_t>(s.n)) {
    throw Error("reduced table size mismatch at a=" + to_string(a));
  }
  for (int p = 0; p < s.n; ++p) {
    out.add_term(p, table->dims[static_cast<std::size_t>(p)].rewindow(window));
  }
  return out;
}

MorseSeries fixed_point_series(const Scenario& s, const Rational& a, const Window& window,
                               Execution exec) {
  require_regular(s, a);
  MorseSeries out(s.n, window);
  for (const auto& f : s.components) {
    const auto side = f.mu > a ? Side::minus : Side::plus;
    out = out + morse_term(f, side, window, exec);
  }
  return out;
}

MorseSeries assemble_lhs(const Scenario& s, const Rational& a, const Window& window,
                         Execution exec) {
  return reduced_series(s, a, window) + fixed_point_series(s, a, window, exec);
}

MorseSeries assemble_rhs(const Scenario& s, const Window& window) {
  if (!s.global_cohomology) {
    throw Error("scenario '" + s.name + "' has no global cohomology");
  }
  MorseSeries out(s.n, window);
  const auto& global = *s.global_cohomology;
  for (std::size_t p = 0; p < global.size(); ++p) {
    out.add_term(static_cast<int>(p), global[p].rewindow(window));
  }
  return out;
}

std::vector<MorseCheck> verify_morse_range(const Scenario& s, const Rational& a,
                                           const Window& ks, Execution exec) {
  require_in_window(s, ks);
  const auto lhs = assemble_lhs(s, a, ks, exec);
  std::optional<MorseSeries> rhs;
  if (s.global_cohomology) rhs = assemble_rhs(s, ks);
  return compare_range(lhs, rhs, ks, exec);
}

MorseCheck verify_morse(const Scenario& s, const Rational& a, Weight k) {
  return verify_morse_range(s, a, Window(k.value, k.value), Execution::serial).front();
}

Rational below_min(const Scenario& s) { return s.min_mu() - 1; }

std::vector<MorseCheck> verify_wu_zhang_range(const Scenario& s, const Window& ks,
                                              Execution exec) {
  return verify_morse_range(s, below_min(s), ks, exec);
}

MorseCheck verify_wu_zhang(const Scenario& s, Weight k) {
  return verify_morse(s, below_min(s), k);
}

bool gap_condition(const Scenario& s, const Rational& a, Weight k) {
  require_regular(s, a);
  for (const auto& f : s.components) {
    const auto support = f.fiber_support();
    if (!support) continue;
    if (f.mu < a && !(k.value > support->second + f.lambda_minus())) return false;
    if (f.mu > a && !(k.value < support->first + f.lambda_plus())) return false;
  }
  return true;
}

MorseCheck verify_tz(const Scenario& s, const Rational& a, Weight k) {
  require_in_window(s, Window(k.value, k.value));
  if (!gap_condition(s, a, k)) {
    throw Error("gap condition fails at a=" + to_string(a) + ", k=" + std::to_string(k.value));
  }
  const Window point(k.value, k.value);
  MorseCheck check{k, restrict_weight(reduced_series(s, a, point), k), std::nullopt,
                   std::nullopt};
  if (!s.global_cohomology) return check;
  check.rhs = restrict_weight(assemble_rhs(s, point), k);
  const auto fixed = restrict_weight(fixed_point_series(s, a, point, Execution::serial), k);
  if (!fixed.is_zero()) {
    check.verdict = Verdict::failure(FixedPointLeakWitness{fixed});
    return check;
  }
  auto v = morse_compare(check.lhs, *check.rhs);
  if (v.witness) {
    if (auto* neg = std::get_if<NegativeCoefficientWitness>(&*v.witness)) neg->weight = k;
  }
  check.verdict = std::move(v);
  return check;
}

BigInt index_value(const FixedComponent& f, Side side, Weight k) {
  const auto& known = f.is_point() ? std::get<IsolatedPoint>(f.kind).fiber_char.window()
                                   : (side == Side::plus ? std::get<GeneralComponent>(f.kind).plus
                                                         : std::get<GeneralComponent>(f.kind).minus)
                                         .at(0)
                                         .window();
  if (!known.contains(k.value)) {
    throw Error("weight outside window: " + std::to_string(k.value));
  }
  const Window point(k.value, k.value);
  BigInt sum = 0;
  for (int p = 0; p <= f.dim_f; ++p) {
    const auto c = polarized_char(f, side, point, p, Execution::serial).coeff_at(k);
    if (p % 2 == 0) {
      sum += c;
    } else {
      sum -= c;
    }
  }
  return morse_shift(f, side) % 2 == 0 ? sum : BigInt(-sum);
}

IdentityCheck index_identity(const Scenario& s, const Rational& a, Weight k) {
  require_in_window(s, Window(k.value, k.value));
  IdentityCheck check{k, reduced_euler(s, a, k), global_euler(s, k), false};
  for (const auto& f : s.components) {
    check.lhs += f.mu > a ? index_value(f, Side::minus, k) : index_value(f, Side::plus, k);
  }
  check.holds = check.lhs == check.rhs;
  return check;
}

IdentityCheck relative_index(const Scenario& s, const Rational& a, const Rational& b, Weight k) {
  if (!(a < b)) throw Error("relative index needs a < b");
  require_in_window(s, Window(k.value, k.value));
  require_regular(s, a);
  require_regular(s, b);
  IdentityCheck check{k, reduced_euler(s, b, k) - reduced_euler(s, a, k), 0, false};
  for (const auto& f : s.components) {
    if (a < f.mu && f.mu < b) {
      check.rhs += index_value(f, Side::minus, k) - index_value(f, Side::plus, k);
    }
  }
  check.holds = check.lhs == check.rhs;
  return check;
}

}  // namespace equimorse
