// Acceptance gate: one line per criterion, exact integer comparisons only.

#include "equimorse/oracle.hpp"
#include "equimorse/scenario_io.hpp"
#include "equimorse/verifier.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace equimorse;

namespace {

struct Outcome {
  bool pass = true;
  long checks = 0;
  std::string detail;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

const Window kCp1Window(-10, 10);
const std::vector<Rational> kCp1Values = {Rational(-1, 2), Rational(1, 2), Rational(3, 2)};

std::string label(std::int64_t d, std::int64_t c) {
  return "d=" + std::to_string(d) + " c=" + std::to_string(c);
}

Scenario cp1(std::int64_t d, std::int64_t c) {
  return build_cpn_scenario({1, {0, 1}, d, c}, kCp1Window, {Rational(1, 2)});
}

Scenario cp2(std::int64_t d) {
  return build_cpn_scenario({2, {0, 1, 2}, d, 0}, Window(-10, 12), {});
}

template <class Fn>
void for_cp1_grid(Fn&& fn) {
  for (std::int64_t d = -3; d <= 5; ++d) {
    for (std::int64_t c = -2; c <= 2; ++c) fn(d, c, cp1(d, c));
  }
}

BigInt reduced_euler_at(const Scenario& s, const Rational& a, Weight k) {
  return euler_eval(restrict_weight(reduced_series(s, a, s.window), k));
}

bool same_verdict(const MorseCheck& x, const MorseCheck& y) {
  if (!x.verdict || !y.verdict) return false;
  if (x.verdict->holds != y.verdict->holds) return false;
  if (x.verdict->quotient.has_value() != y.verdict->quotient.has_value()) return false;
  if (x.verdict->quotient && !(*x.verdict->quotient == *y.verdict->quotient)) return false;
  return x.lhs == y.lhs && *x.rhs == *y.rhs;
}

Outcome a1_main_inequality() {
  Outcome o;
  for_cp1_grid([&](std::int64_t d, std::int64_t c, const Scenario& s) {
    const auto oracle = cpn_cohomology_character({1, {0, 1}, d, c}, kCp1Window);
    o.expect((*s.global_cohomology)[0] == oracle[0] && (*s.global_cohomology)[1] == oracle[1],
             label(d, c) + ": global cohomology differs from the oracle");
    for (const auto& a : kCp1Values) {
      for (const auto& chk : verify_morse_range(s, a, kCp1Window)) {
        o.expect(chk.holds(), label(d, c) + " a=" + to_string(a) + " k=" +
                                  std::to_string(chk.k.value) + ": inequality fails");
      }
    }
  });
  return o;
}

Outcome a2_below_image() {
  Outcome o;
  for (std::int64_t d = 0; d <= 4; ++d) {
    const auto s = cp2(d);
    for (const auto& chk : verify_wu_zhang_range(s, Window(-10, 12))) {
      o.expect(chk.holds(), "d=" + std::to_string(d) + " k=" + std::to_string(chk.k.value));
    }
  }
  return o;
}

Outcome a3_index_identity() {
  Outcome o;
  for_cp1_grid([&](std::int64_t d, std::int64_t c, const Scenario& s) {
    for (const auto& a : kCp1Values) {
      for (std::int64_t k = kCp1Window.lo(); k <= kCp1Window.hi(); ++k) {
        o.expect(index_identity(s, a, Weight(k)).holds,
                 label(d, c) + " a=" + to_string(a) + " k=" + std::to_string(k));
      }
    }
  });
  for (std::int64_t d = 0; d <= 4; ++d) {
    const auto s = cp2(d);
    for (std::int64_t k = -10; k <= 12; ++k) {
      o.expect(index_identity(s, below_min(s), Weight(k)).holds,
               "CP2 d=" + std::to_string(d) + " k=" + std::to_string(k));
    }
  }
  return o;
}

Outcome a4_relative_index() {
  Outcome o;
  for_cp1_grid([&](std::int64_t d, std::int64_t c, const Scenario& s) {
    for (std::size_t i = 0; i < kCp1Values.size(); ++i) {
      for (std::size_t j = i + 1; j < kCp1Values.size(); ++j) {
        const auto& a = kCp1Values[i];
        const auto& b = kCp1Values[j];
        for (std::int64_t k = kCp1Window.lo(); k <= kCp1Window.hi(); ++k) {
          const auto tag = label(d, c) + " a=" + to_string(a) + " b=" + to_string(b) +
                           " k=" + std::to_string(k);
          const auto rel = relative_index(s, a, b, Weight(k));
          o.expect(rel.holds, tag + ": relative index fails");
          const auto ia = index_identity(s, a, Weight(k));
          const auto ib = index_identity(s, b, Weight(k));
          o.expect(rel.lhs == reduced_euler_at(s, b, Weight(k)) - reduced_euler_at(s, a, Weight(k)),
                   tag + ": reduced difference mismatch");
          o.expect(rel.lhs - rel.rhs == ib.lhs - ia.lhs && ia.rhs == ib.rhs,
                   tag + ": not the difference of the two index identities");
        }
      }
    }
  });
  return o;
}

Outcome a5_support_bounds() {
  Outcome o;
  std::vector<Scenario> scenarios;
  for_cp1_grid([&](std::int64_t, std::int64_t, const Scenario& s) { scenarios.push_back(s); });
  for (std::int64_t d = 0; d <= 4; ++d) scenarios.push_back(cp2(d));

  for (const auto& s : scenarios) {
    for (const auto& f : s.components) {
      o.expect(supp_bounds_check(f, s.window), s.name + " F=" + f.id + ": bound check fails");

      // The same component with its characters stored explicitly, then one
      // coefficient injected just past the plus-side bound.
      const auto [k1, k2] = *f.fiber_support();
      FixedComponent stored = f;
      GeneralComponent g{{k1, k2},
                         {polarized_char(f, Side::plus, s.window)},
                         {polarized_char(f, Side::minus, s.window)}};
      stored.kind = g;
      o.expect(supp_bounds_check(stored, s.window), s.name + " F=" + f.id + ": stored form fails");

      const auto bad_weight = k2 + f.lambda_minus() + 1;
      if (!s.window.contains(bad_weight)) continue;
      g.plus[0] = add(g.plus[0], WindowedCharacter::monomial(bad_weight, s.window));
      stored.kind = g;
      o.expect(!supp_bounds_check(stored, s.window), s.name + " F=" + f.id + ": mutation undetected");
      Scenario mutated = s;
      for (auto& c : mutated.components) {
        if (c.id == f.id) c = stored;
      }
      bool reported = false;
      for (const auto& v : validate_scenario(mutated)) {
        reported = reported || v.rfind("support bound violated: F=" + f.id, 0) == 0;
      }
      o.expect(reported, s.name + " F=" + f.id + ": validation misses the mutation");
    }
  }
  return o;
}

Outcome a6_twist() {
  Outcome o;
  for_cp1_grid([&](std::int64_t d, std::int64_t c, const Scenario& s) {
    for (std::int64_t m = -2; m <= 2; ++m) {
      const auto t = twist_by_F_power(s, m);
      o.expect(t.window == s.window, label(d, c) + ": twist changed the window");
      for (const auto& a : kCp1Values) {
        for (std::int64_t k = kCp1Window.lo(); k <= kCp1Window.hi(); ++k) {
          if (!kCp1Window.contains(k + m)) continue;
          o.expect(same_verdict(verify_morse(t, a, Weight(k)), verify_morse(s, a, Weight(k + m))),
                   label(d, c) + " m=" + std::to_string(m) + " a=" + to_string(a) +
                       " k=" + std::to_string(k));
        }
      }
    }
  });
  return o;
}

Outcome a7_prequantum() {
  Outcome o;
  const auto s = load_scenario(std::string(EQUIMORSE_FIXTURE_DIR) + "/cp1_o2_prequantum.json");
  o.expect(s.prequantum && validate_scenario(s).empty(), "fixture is not a valid prequantum scenario");
  const Rational a(0);
  const Weight k(0);
  o.expect(gap_condition(s, a, k), "gap condition fails at a=0, k=0");
  const auto tz = verify_tz(s, a, k);
  o.expect(tz.holds(), "reduction inequality fails");
  o.expect(tz.lhs == IntMorsePoly{1}, "reduced side is " + tz.lhs.render() + ", expected 1");

  const auto oracle = cpn_cohomology_character({1, {0, 1}, 2, -1}, s.window);
  o.expect(oracle[0].render() == "u^-1 + 1 + u^1", "oracle H0 is " + oracle[0].render());
  o.expect(*tz.rhs == IntMorsePoly(std::vector<BigInt>{oracle[0].coeff_at(k), oracle[1].coeff_at(k)}),
           "global side disagrees with the oracle");
  o.expect(oracle[0].coeff_at(k) == 1, "mult_0 H0 is not 1");

  const auto* table = s.reduced_at(a);
  o.expect(table != nullptr, "no reduced table at a=0");
  if (table) {
    BigInt reduced = 0;
    for (std::size_t p = 0; p < table->dims.size(); ++p) {
      reduced += (p % 2 == 0 ? 1 : -1) * table->dims[p].coeff_at(k);
    }
    const BigInt global = oracle[0].coeff_at(k) - oracle[1].coeff_at(k);
    o.expect(reduced == global, "reduced and global Euler numbers differ at k=0");
  }
  return o;
}

Outcome a8_negative_control() {
  Outcome o;
  CpnScenarioOptions flipped;
  flipped.name = "cp1_trivial_flipped";
  flipped.mu_scale = Rational(-1);
  flipped.mu_offset = Rational(1);
  const auto built = build_cpn_scenario({1, {0, 1}, 0, 0}, kCp1Window, {Rational(1, 2)}, flipped);
  const auto shipped =
      load_scenario(std::string(EQUIMORSE_FIXTURE_DIR) + "/cp1_trivial_wrongsign.json");
  for (const auto* s : {&built, &shipped}) {
    const auto chk = verify_morse(*s, Rational(1, 2), Weight(0));
    o.expect(chk.verdict && !chk.verdict->holds, s->name + ": inequality unexpectedly holds");
    const auto* rem = chk.verdict && chk.verdict->witness
                          ? std::get_if<RemainderWitness>(&*chk.verdict->witness)
                          : nullptr;
    o.expect(rem && rem->value == 2, s->name + ": witness is not remainder 2");
  }
  return o;
}

Outcome a9_localization() {
  Outcome o;
  const std::vector<std::vector<std::int64_t>> cp1_weights = {{0, 1}, {0, 2}, {1, -1}, {0, 3}, {-2, 1}};
  const std::vector<std::vector<std::int64_t>> cp2_weights = {
      {0, 1, 2}, {0, 1, 3}, {-1, 0, 2}, {0, 2, 5}, {1, -1, 3}};
  const std::vector<Window> windows = {Window(-10, 10), Window(-4, 6), Window(-25, 25), Window(0, 3)};
  for (int n = 1; n <= 2; ++n) {
    for (const auto& weights : n == 1 ? cp1_weights : cp2_weights) {
      for (std::int64_t d = -5; d <= 5; ++d) {
        for (std::int64_t c = -2; c <= 2; ++c) {
          const ProjectiveAction act{n, weights, d, c};
          for (const auto& w : windows) {
            const auto fixed = atiyah_bott_euler(act, w);
            const auto oracle = oracle_euler_character(act, w);
            std::ostringstream tag;
            tag << "n=" << n << " w=(";
            for (auto x : weights) tag << x << ",";
            tag << ") d=" << d << " c=" << c << " window=[" << w.lo() << "," << w.hi() << "]";
            o.expect(fixed.terms() == oracle.terms(), tag.str());
          }
        }
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"A1 main inequality on the CP1 family", a1_main_inequality},
      {"A2 inequality below the moment image on CP2", a2_below_image},
      {"A3 index identity", a3_index_identity},
      {"A4 relative index", a4_relative_index},
      {"A5 support bounds and mutation", a5_support_bounds},
      {"A6 twist equivariance", a6_twist},
      {"A7 prequantum reduction", a7_prequantum},
      {"A8 opposite sign convention fails with remainder 2", a8_negative_control},
      {"A9 fixed-point sum against the oracle", a9_localization},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << "  (" << o.checks << " checks, " << ms
              << " ms)";
    if (!o.pass) std::cout << "  first failure: " << o.detail;
    std::cout << "\n";
    failures += o.pass ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail")
            << "\n";
  return failures == 0 ? 0 : 1;
}
