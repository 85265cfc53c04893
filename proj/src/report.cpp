#include "equimorse/report.hpp"

#include <json.hpp>

#include <sstream>

namespace equimorse {

using nlohmann::ordered_json;

namespace {

ordered_json int_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

ordered_json witness_json(const Witness& w) {
  ordered_json out;
  if (const auto* r = std::get_if<RemainderWitness>(&w)) {
    out["kind"] = "remainder";
    out["value"] = int_json(r->value);
  } else if (const auto* n = std::get_if<NegativeCoefficientWitness>(&w)) {
    out["kind"] = "negative_coefficient";
    out["degree"] = n->degree;
    if (n->weight) out["weight"] = n->weight->value;
    out["value"] = int_json(n->value);
  } else {
    out["kind"] = "fixed_point_leak";
    out["terms"] = std::get<FixedPointLeakWitness>(w).fixed_point_terms.render();
  }
  return out;
}

struct EntryJson {
  ordered_json operator()(const MorseCheck& c) const {
    ordered_json out;
    out["k"] = c.k.value;
    out["holds"] = c.verdict ? ordered_json(c.verdict->holds) : ordered_json(nullptr);
    out["lhs"] = c.lhs.render();
    if (c.rhs) out["rhs"] = c.rhs->render();
    if (c.verdict && c.verdict->quotient) out["Q"] = c.verdict->quotient->render();
    if (c.verdict && c.verdict->witness) out["witness"] = witness_json(*c.verdict->witness);
    return out;
  }
  ordered_json operator()(const IdentityCheck& c) const {
    ordered_json out;
    out["k"] = c.k.value;
    out["holds"] = c.holds;
    out["lhs"] = int_json(c.lhs);
    out["rhs"] = int_json(c.rhs);
    return out;
  }
  ordered_json operator()(const GapCheck& c) const {
    ordered_json out;
    out["k"] = c.k.value;
    out["holds"] = c.holds;
    return out;
  }
  ordered_json operator()(const ErrorEntry& e) const {
    ordered_json out;
    out["k"] = e.k.value;
    out["holds"] = false;
    out["error"] = e.error;
    return out;
  }
};

struct EntryText {
  std::string operator()(const MorseCheck& c) const {
    std::ostringstream out;
    out << "k=" << c.k.value << "  ";
    if (!c.verdict) {
      out << "lhs " << c.lhs.render();
      return out.str();
    }
    out << (c.verdict->holds ? "holds" : "FAILS") << "  lhs " << c.lhs.render() << "  rhs "
        << c.rhs->render();
    if (c.verdict->quotient) out << "  Q = " << c.verdict->quotient->render();
    if (c.verdict->witness) out << "  witness: " << describe(*c.verdict->witness);
    return out.str();
  }
  std::string operator()(const IdentityCheck& c) const {
    return "k=" + std::to_string(c.k.value) + "  " + (c.holds ? "holds" : "FAILS") + "  lhs " +
           c.lhs.str() + "  rhs " + c.rhs.str();
  }
  std::string operator()(const GapCheck& c) const {
    return "k=" + std::to_string(c.k.value) + "  gap " + (c.holds ? "holds" : "fails");
  }
  std::string operator()(const ErrorEntry& e) const {
    return "k=" + std::to_string(e.k.value) + "  error: " + e.error;
  }
};

}  // namespace

std::optional<bool> VerificationReport::holds() const {
  bool all = true;
  for (const auto& entry : results) {
    if (const auto* m = std::get_if<MorseCheck>(&entry)) {
      if (!m->verdict) return std::nullopt;
      all = all && m->verdict->holds;
    } else if (const auto* i = std::get_if<IdentityCheck>(&entry)) {
      all = all && i->holds;
    } else if (const auto* g = std::get_if<GapCheck>(&entry)) {
      all = all && g->holds;
    } else {
      all = false;
    }
  }
  return all;
}

bool VerificationReport::has_errors() const {
  return std::any_of(results.begin(), results.end(),
                     [](const auto& e) { return std::holds_alternative<ErrorEntry>(e); });
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json doc;
  doc["scenario"] = report.scenario;
  doc["mode"] = report.mode;
  ordered_json params;
  if (report.a) params["a"] = to_string(*report.a);
  if (report.b) params["b"] = to_string(*report.b);
  params["k"] = ordered_json::array({report.ks.lo(), report.ks.hi()});
  params["window"] = ordered_json::array({report.window.lo(), report.window.hi()});
  doc["parameters"] = params;
  const auto holds = report.holds();
  doc["holds"] = holds ? ordered_json(*holds) : ordered_json(nullptr);
  auto results = ordered_json::array();
  for (const auto& entry : report.results) results.push_back(std::visit(EntryJson{}, entry));
  doc["results"] = results;
  return doc.dump(2) + "\n";
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << report.mode << "  " << report.scenario;
  if (report.a) out << "  a=" << to_string(*report.a);
  if (report.b) out << "  b=" << to_string(*report.b);
  out << "  k=" << report.ks.lo() << ".." << report.ks.hi() << "  window=[" << report.window.lo()
      << "," << report.window.hi() << "]\n";
  for (const auto& entry : report.results) out << "  " << std::visit(EntryText{}, entry) << "\n";
  const auto holds = report.holds();
  if (report.mode == "gap") {
    const auto n = std::count_if(report.results.begin(), report.results.end(), [](const auto& e) {
      const auto* g = std::get_if<GapCheck>(&e);
      return g && g->holds;
    });
    out << "result: gap condition holds at " << n << " of " << report.results.size()
        << " weights\n";
  } else if (!holds) {
    out << "result: left side only (no global cohomology)\n";
  } else {
    out << "result: " << (*holds ? "all hold" : "FAILED") << " (" << report.results.size()
        << " weights)\n";
  }
  return out.str();
}

}  // namespace equimorse
