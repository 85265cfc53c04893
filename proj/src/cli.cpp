#include "equimorse/cli.hpp"

#include "equimorse/oracle.hpp"
#include "equimorse/report.hpp"
#include "equimorse/scenario_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>

namespace equimorse {

namespace {

const std::set<std::string> kValueOptions = {
    "--a",     "--b",      "--k",        "--window",    "--format", "--component", "--side",
    "--n",     "--weights", "--d",       "--c",         "--reduced", "--mu-scale", "--mu-offset",
    "--name",  "--output", "--family"};

/// Glues every value option to its value (`--k -5..8` -> `--k=-5..8`) so
/// negative numbers are never mistaken for flags.
std::vector<std::string> glue_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    auto arg = args[i] == "-o" ? std::string("--output") : args[i];
    if (kValueOptions.count(arg) && i + 1 < args.size()) {
      out.push_back(arg + "=" + args[++i]);
    } else {
      out.push_back(arg);
    }
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current.push_back(ch);
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

struct Options {
  std::string scenario_path;
  std::string a, b, k, window, format = "text";
  std::string component, side;
  bool serial = false;
  // gen-fixture
  std::string family = "cpn", weights = "0,1", reduced, mu_scale = "1", mu_offset = "0", name,
              output;
  int n = 1;
  std::int64_t d = 0, c = 0;
  bool prequantum = false;
};

Execution exec_of(const Options& o) { return o.serial ? Execution::serial : Execution::parallel; }

Scenario open_scenario(const Options& o) {
  auto s = load_scenario(resolve_scenario_path(o.scenario_path));
  if (!o.window.empty()) {
    const auto w = parse_range(o.window);
    if (!s.window.contains(w)) {
      throw Error("window override may only shrink the scenario window");
    }
    s = with_window(s, w);
  }
  return s;
}

Window k_range(const Options& o, const Scenario& s) {
  if (o.k.empty()) return s.window;
  const auto ks = parse_range(o.k);
  if (!s.window.contains(ks)) {
    throw Error("weight outside window: k=" + o.k + " not inside [" + std::to_string(s.window.lo()) +
                "," + std::to_string(s.window.hi()) + "]");
  }
  return ks;
}

Rational require_a(const Options& o) {
  if (o.a.empty()) throw Error("missing --a");
  return parse_rational(o.a);
}

VerificationReport base_report(const Scenario& s, std::string mode, const Window& ks) {
  VerificationReport r;
  r.scenario = s.name;
  r.mode = std::move(mode);
  r.ks = ks;
  r.window = s.window;
  return r;
}

int emit(const VerificationReport& r, const Options& o, std::ostream& out, bool informational) {
  out << (o.format == "json" ? report_to_json(r) : report_to_text(r));
  if (r.has_errors()) return kExitUsage;
  if (informational) return kExitHolds;
  const auto holds = r.holds();
  return !holds || *holds ? kExitHolds : kExitFails;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto s = open_scenario(o);
  const auto ks = k_range(o, s);
  auto r = base_report(s, "main", ks);
  r.a = require_a(o);
  for (auto& c : verify_morse_range(s, *r.a, ks, exec_of(o))) r.results.emplace_back(std::move(c));
  return emit(r, o, out, false);
}

int cmd_wu_zhang(const Options& o, std::ostream& out) {
  const auto s = open_scenario(o);
  const auto ks = k_range(o, s);
  auto r = base_report(s, "wu_zhang", ks);
  r.a = below_min(s);
  for (auto& c : verify_wu_zhang_range(s, ks, exec_of(o))) r.results.emplace_back(std::move(c));
  return emit(r, o, out, false);
}

int cmd_tz(const Options& o, std::ostream& out) {
  const auto s = open_scenario(o);
  const auto ks = k_range(o, s);
  auto r = base_report(s, "tz_reduction", ks);
  r.a = require_a(o);
  require_regular(s, *r.a);
  for (auto k = ks.lo(); k <= ks.hi(); ++k) {
    if (!gap_condition(s, *r.a, Weight(k))) {
      r.results.emplace_back(ErrorEntry{Weight(k), "gap condition fails"});
      continue;
    }
    r.results.emplace_back(verify_tz(s, *r.a, Weight(k)));
  }
  return emit(r, o, out, false);
}

int cmd_index(const Options& o, std::ostream& out) {
  const auto s = open_scenario(o);
  const auto ks = k_range(o, s);
  auto r = base_report(s, "index", ks);
  r.a = o.a.empty() ? below_min(s) : parse_rational(o.a);
  for (auto& c : kernels::sweep(ks, exec_of(o), [&](std::int64_t k) {
         return index_identity(s, *r.a, Weight(k));
       })) {
    r.results.emplace_back(std::move(c));
  }
  return emit(r, o, out, false);
}

int cmd_relative_index(const Options& o, std::ostream& out) {
  const auto s = open_scenario(o);
  const auto ks = k_range(o, s);
  auto r = base_report(s, "relative_index", ks);
  r.a = require_a(o);
  if (o.b.empty()) throw Error("missing --b");
  r.b = parse_rational(o.b);
  for (auto& c : kernels::sweep(ks, exec_of(o), [&](std::int64_t k) {
         return relative_index(s, *r.a, *r.b, Weight(k));
       })) {
    r.results.emplace_back(std::move(c));
  }
  return emit(r, o, out, false);
}

int cmd_gap(const Options& o, std::ostream& out) {
  const auto s = open_scenario(o);
  const auto ks = k_range(o, s);
  auto r = base_report(s, "gap", ks);
  r.a = require_a(o);
  for (auto k = ks.lo(); k <= ks.hi(); ++k) {
    r.results.emplace_back(GapCheck{Weight(k), gap_condition(s, *r.a, Weight(k))});
  }
  return emit(r, o, out, true);
}

int cmd_character(const Options& o, std::ostream& out) {
  const auto s = open_scenario(o);
  std::vector<Side> sides = {Side::plus, Side::minus};
  if (!o.side.empty()) sides = {parse_side(o.side)};
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  std::ostringstream text;
  text << "characters  " << s.name << "  window=[" << s.window.lo() << "," << s.window.hi()
       << "]\n";
  for (const auto& f : s.components) {
    if (!o.component.empty() && f.id != o.component) continue;
    for (auto side : sides) {
      for (int p = 0; p <= f.dim_f; ++p) {
        const auto ch = polarized_char(f, side, s.window, p, exec_of(o));
        nlohmann::ordered_json e;
        e["id"] = f.id;
        e["side"] = to_string(side);
        e["p"] = p;
        e["t_degree"] = p + morse_shift(f, side);
        e["support"] = to_string(ch.support_kind());
        if (ch.lower_bound()) e["lower"] = *ch.lower_bound();
        if (ch.upper_bound()) e["upper"] = *ch.upper_bound();
        e["character"] = ch.render();
        doc.push_back(e);
        text << "  F=" << f.id << " side=" << to_string(side) << " p=" << p
             << " t^" << p + morse_shift(f, side) << "  [" << to_string(ch.support_kind())
             << "]  " << ch.render() << "\n";
      }
    }
  }
  if (o.component.empty() && s.global_cohomology) {
    for (std::size_t p = 0; p < s.global_cohomology->size(); ++p) {
      const auto& ch = (*s.global_cohomology)[p];
      nlohmann::ordered_json e;
      e["global"] = p;
      e["character"] = ch.render();
      doc.push_back(e);
      text << "  H^" << p << "(M, E)  " << ch.render() << "\n";
    }
  }
  out << (o.format == "json" ? doc.dump(2) + "\n" : text.str());
  return kExitHolds;
}

int cmd_gen_fixture(const Options& o, std::ostream& out) {
  std::vector<Rational> reduced;
  for (const auto& v : split_commas(o.reduced)) reduced.push_back(parse_rational(v));
  const Window window = o.window.empty() ? Window(-10, 10) : parse_range(o.window);
  Scenario s;
  if (o.family == "cpn") {
    ProjectiveAction act;
    act.n = o.n;
    for (const auto& w : split_commas(o.weights)) act.weights.push_back(parse_range(w).lo());
    act.d = o.d;
    act.lift = o.c;
    CpnScenarioOptions opts;
    opts.name = o.name;
    opts.mu_scale = parse_rational(o.mu_scale);
    opts.mu_offset = parse_rational(o.mu_offset);
    opts.prequantum = o.prequantum;
    s = build_cpn_scenario(act, window, reduced, opts);
  } else if (o.family == "cp2-line") {
    s = build_cp2_line_scenario(o.d, o.c, window, reduced);
    if (!o.name.empty()) s.name = o.name;
  } else {
    throw Error("unknown fixture family '" + o.family + "' (expected cpn or cp2-line)");
  }
  const auto violations = validate_scenario(s);
  if (!violations.empty()) throw Error("generated scenario is invalid: " + violations.front());
  const auto text = scenario_to_json(s);
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output);
    if (!file) throw Error("cannot write '" + o.output + "'");
    file << text;
  }
  return kExitHolds;
}

int cmd_validate(const Options& o, std::ostream& out) {
  std::ifstream in(resolve_scenario_path(o.scenario_path));
  if (!in) throw Error("cannot open scenario file '" + o.scenario_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const auto s = parse_scenario(buf.str());
  const auto violations = validate_scenario(s);
  if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["scenario"] = s.name;
    doc["valid"] = violations.empty();
    doc["violations"] = violations;
    out << doc.dump(2) << "\n";
  } else if (violations.empty()) {
    out << s.name << ": valid\n";
  } else {
    for (const auto& v : violations) out << s.name << ": " << v << "\n";
  }
  return violations.empty() ? kExitHolds : kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of holomorphic Morse inequalities for circle actions",
               "equimorse"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool needs_a) {
    cmd->add_option("scenario", o.scenario_path, "Scenario JSON file")->required();
    auto* a = cmd->add_option("--a", o.a, "Regular value a (p/q)");
    if (needs_a) a->required();
    cmd->add_option("--k", o.k, "Weight or weight range lo..hi (default: window)");
    cmd->add_option("--window", o.window, "Shrink the scenario window (lo..hi)");
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_flag("--serial", o.serial, "Use the serial reference kernels");
  };

  std::map<std::string, std::function<int()>> handlers;
  auto* verify = app.add_subcommand("verify", "Main inequality at a regular value a");
  add_common(verify, true);
  handlers["verify"] = [&] { return cmd_verify(o, out); };

  auto* wz = app.add_subcommand("wu-zhang", "Inequality with a below the moment image");
  add_common(wz, false);
  handlers["wu-zhang"] = [&] { return cmd_wu_zhang(o, out); };

  auto* tz = app.add_subcommand("tz", "Reduction inequality under the gap condition");
  add_common(tz, true);
  handlers["tz"] = [&] { return cmd_tz(o, out); };

  auto* index = app.add_subcommand("index", "Index identity at t = -1");
  add_common(index, false);
  handlers["index"] = [&] { return cmd_index(o, out); };

  auto* rel = app.add_subcommand("relative-index", "Relative index between two regular values");
  add_common(rel, true);
  rel->add_option("--b", o.b, "Second regular value b > a")->required();
  handlers["relative-index"] = [&] { return cmd_relative_index(o, out); };

  auto* gap = app.add_subcommand("gap", "Evaluate the gap condition");
  add_common(gap, true);
  handlers["gap"] = [&] { return cmd_gap(o, out); };

  auto* character = app.add_subcommand("character", "Print polarized characters");
  character->add_option("scenario", o.scenario_path, "Scenario JSON file")->required();
  character->add_option("--component", o.component, "Component id");
  character->add_option("--side", o.side, "+ or -");
  character->add_option("--window", o.window, "Shrink the scenario window (lo..hi)");
  character->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  character->add_flag("--serial", o.serial);
  handlers["character"] = [&] { return cmd_character(o, out); };

  auto* gen = app.add_subcommand("gen-fixture", "Generate a scenario file");
  gen->add_option("--family", o.family, "cpn or cp2-line");
  gen->add_option("--n", o.n, "Complex dimension of CP^n");
  gen->add_option("--weights", o.weights, "Coordinate weights, comma separated");
  gen->add_option("--d", o.d, "Degree of O(d)");
  gen->add_option("--c", o.c, "Lift constant");
  gen->add_option("--window", o.window, "Weight window lo..hi");
  gen->add_option("--reduced", o.reduced, "Regular values for reduced tables, comma separated");
  gen->add_option("--mu-scale", o.mu_scale, "mu(P_i) = scale * w_i + offset");
  gen->add_option("--mu-offset", o.mu_offset);
  gen->add_flag("--prequantum", o.prequantum, "Mark the bundle prequantum");
  gen->add_option("--name", o.name, "Scenario name");
  gen->add_option("--output", o.output, "Output path (default stdout)");
  handlers["gen-fixture"] = [&] { return cmd_gen_fixture(o, out); };

  auto* validate = app.add_subcommand("validate", "Validate a scenario file");
  validate->add_option("scenario", o.scenario_path, "Scenario JSON file")->required();
  validate->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  handlers["validate"] = [&] { return cmd_validate(o, out); };

  auto args = glue_values(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  try {
    for (const auto* sub : app.get_subcommands()) return handlers.at(sub->get_name())();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace equimorse
