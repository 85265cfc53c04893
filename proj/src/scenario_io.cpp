#include "equimorse/scenario_io.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace equimorse {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw Error("invalid field '" + path + "': " + what);
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) field_error(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) field_error(path + "." + key, "missing");
  return *it;
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string()) field_error(path, "expected a string");
  return v.get<std::string>();
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) field_error(path, "expected an integer");
  return v.get<std::int64_t>();
}

Rational as_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      field_error(path, e.what());
    }
  }
  field_error(path, "expected an integer or a 'p/q' string");
}

WindowedCharacter as_finite_char(const json& v, const Window& window, const std::string& path) {
  try {
    return WindowedCharacter::parse(as_string(v, path), window);
  } catch (const Error& e) {
    field_error(path, e.what());
  }
}

/// Series known only on the window (no support bounds claimed).
WindowedCharacter as_window_char(const json& v, const Window& window, const std::string& path) {
  try {
    return WindowedCharacter::from_window_data(
        window, WindowedCharacter::parse_terms(as_string(v, path)), std::nullopt, std::nullopt);
  } catch (const Error& e) {
    field_error(path, e.what());
  }
}

std::vector<WindowedCharacter> as_window_chars(const json& v, const Window& window,
                                               const std::string& path) {
  if (!v.is_array()) field_error(path, "expected an array of characters");
  std::vector<WindowedCharacter> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_window_char(v[i], window, path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

FixedComponent parse_component(const json& c, int n, const Window& window,
                               const std::string& path) {
  FixedComponent f;
  f.id = as_string(require(c, "id", path), path + ".id");
  f.mu = as_rational(require(c, "mu", path), path + ".mu");
  f.codim = static_cast<int>(as_int(require(c, "codim", path), path + ".codim"));
  f.dim_f = c.contains("dim") ? static_cast<int>(as_int(c["dim"], path + ".dim")) : n - f.codim;
  const auto& weights = require(c, "weights", path);
  if (!weights.is_array()) field_error(path + ".weights", "expected an array");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    f.weights.push_back(as_int(weights[i], path + ".weights[" + std::to_string(i) + "]"));
  }
  const auto kind = as_string(require(c, "kind", path), path + ".kind");
  if (kind == "point") {
    f.kind = IsolatedPoint{as_finite_char(require(c, "fiber_char", path), window,
                                          path + ".fiber_char")};
  } else if (kind == "general") {
    GeneralComponent g;
    const auto& support = require(c, "fiber_support", path);
    if (!support.is_array() || support.size() != 2) {
      field_error(path + ".fiber_support", "expected [k1, k2]");
    }
    g.fiber_support = {as_int(support[0], path + ".fiber_support[0]"),
                       as_int(support[1], path + ".fiber_support[1]")};
    const auto& coh = require(c, "cohomology", path);
    g.plus = as_window_chars(require(coh, "+", path + ".cohomology"), window,
                             path + ".cohomology.+");
    g.minus = as_window_chars(require(coh, "-", path + ".cohomology"), window,
                              path + ".cohomology.-");
    f.kind = std::move(g);
  } else {
    field_error(path + ".kind", "expected 'point' or 'general', got '" + kind + "'");
  }
  return f;
}

ReducedSpaceTable parse_reduced(const json& r, int n, const Window& window,
                                const std::string& path) {
  const auto a = as_rational(require(r, "a", path), path + ".a");
  if (r.contains("empty") && r["empty"].is_boolean() && r["empty"].get<bool>()) {
    return empty_table(a, n, window);
  }
  if (r.contains("rule")) {
    const auto rule = as_string(r["rule"], path + ".rule");
    if (rule != "rank") field_error(path + ".rule", "unknown rule '" + rule + "'");
    const auto rank = r.contains("rank") ? as_int(r["rank"], path + ".rank") : 1;
    if (rank < 0) field_error(path + ".rank", "rank must be non-negative");
    return point_rule_table(a, BigInt(rank), window);
  }
  ReducedSpaceTable t;
  t.a = a;
  t.dims = as_window_chars(require(r, "dims", path), window, path + ".dims");
  return t;
}

ordered_json window_json(const Window& w) { return ordered_json::array({w.lo(), w.hi()}); }

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("parse error: ") + e.what());
  }
  Scenario s;
  s.name = as_string(require(doc, "name", "$"), "name");
  s.n = static_cast<int>(as_int(require(doc, "n", "$"), "n"));
  const auto& window = require(doc, "window", "$");
  if (!window.is_array() || window.size() != 2) field_error("window", "expected [lo, hi]");
  try {
    s.window = Window(as_int(window[0], "window[0]"), as_int(window[1], "window[1]"));
  } catch (const Error& e) {
    field_error("window", e.what());
  }
  if (doc.contains("prequantum")) {
    if (!doc["prequantum"].is_boolean()) field_error("prequantum", "expected a boolean");
    s.prequantum = doc["prequantum"].get<bool>();
  }
  if (doc.contains("provenance")) s.provenance = as_string(doc["provenance"], "provenance");

  const auto& components = require(doc, "components", "$");
  if (!components.is_array()) field_error("components", "expected an array");
  for (std::size_t i = 0; i < components.size(); ++i) {
    s.components.push_back(
        parse_component(components[i], s.n, s.window, "components[" + std::to_string(i) + "]"));
  }
  if (doc.contains("reduced")) {
    const auto& reduced = doc["reduced"];
    if (!reduced.is_array()) field_error("reduced", "expected an array");
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      s.reduced.push_back(
          parse_reduced(reduced[i], s.n, s.window, "reduced[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("global_cohomology") && !doc["global_cohomology"].is_null()) {
    const auto& global = doc["global_cohomology"];
    if (!global.is_array()) field_error("global_cohomology", "expected an array");
    std::vector<WindowedCharacter> chars;
    for (std::size_t i = 0; i < global.size(); ++i) {
      chars.push_back(
          as_finite_char(global[i], s.window, "global_cohomology[" + std::to_string(i) + "]"));
    }
    s.global_cohomology = std::move(chars);
  }
  return s;
}

Scenario load_scenario_text(std::string_view json_text) {
  auto s = parse_scenario(json_text);
  const auto violations = validate_scenario(s);
  if (!violations.empty()) {
    std::string msg = "invalid scenario '" + s.name + "': ";
    for (std::size_t i = 0; i < violations.size(); ++i) {
      if (i) msg += "; ";
      msg += violations[i];
    }
    throw Error(msg);
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open scenario file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_scenario_text(buf.str());
}

std::string scenario_to_json(const Scenario& s) {
  ordered_json doc;
  doc["name"] = s.name;
  doc["n"] = s.n;
  doc["window"] = window_json(s.window);
  if (s.prequantum) doc["prequantum"] = true;
  if (!s.provenance.empty()) doc["provenance"] = s.provenance;

  auto components = ordered_json::array();
  for (const auto& f : s.components) {
    ordered_json c;
    c["id"] = f.id;
    c["mu"] = to_string(f.mu);
    c["codim"] = f.codim;
    c["dim"] = f.dim_f;
    c["weights"] = f.weights;
    if (const auto* pt = std::get_if<IsolatedPoint>(&f.kind)) {
      c["kind"] = "point";
      c["fiber_char"] = pt->fiber_char.render();
    } else {
      const auto& g = std::get<GeneralComponent>(f.kind);
      c["kind"] = "general";
      c["fiber_support"] = ordered_json::array({g.fiber_support.first, g.fiber_support.second});
      ordered_json coh;
      for (const auto& [key, table] : {std::pair{"+", &g.plus}, std::pair{"-", &g.minus}}) {
        auto arr = ordered_json::array();
        for (const auto& ch : *table) arr.push_back(ch.render());
        coh[key] = arr;
      }
      c["cohomology"] = coh;
    }
    components.push_back(c);
  }
  doc["components"] = components;

  auto reduced = ordered_json::array();
  for (const auto& t : s.reduced) {
    ordered_json r;
    r["a"] = to_string(t.a);
    if (t.empty) {
      r["empty"] = true;
    } else if (t.rank_rule) {
      r["rule"] = "rank";
      r["rank"] = checked_int64(*t.rank_rule);
    } else {
      auto dims = ordered_json::array();
      for (const auto& d : t.dims) dims.push_back(d.render());
      r["dims"] = dims;
    }
    reduced.push_back(r);
  }
  doc["reduced"] = reduced;

  if (s.global_cohomology) {
    auto global = ordered_json::array();
    for (const auto& ch : *s.global_cohomology) global.push_back(ch.render());
    doc["global_cohomology"] = global;
  }
  return doc.dump(2) + "\n";
}

std::filesystem::path resolve_scenario_path(const std::filesystem::path& path) {
  if (std::filesystem::exists(path)) return path;
  if (const char* dir = std::getenv("EQUIMORSE_FIXTURES"); dir && *dir) {
    const std::filesystem::path base(dir);
    if (std::filesystem::exists(base / path)) return base / path;
    if (std::filesystem::exists(base / path.filename())) return base / path.filename();
  }
  return path;
}

}  // namespace equimorse
