#pragma once

#include "equimorse/verifier.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace equimorse {

using ReportEntry = std::variant<MorseCheck, IdentityCheck, GapCheck, ErrorEntry>;

/// One verification run over a range of weights.
struct VerificationReport {
  std::string scenario;
  std::string mode;  // main, wu_zhang, tz_reduction, index, relative_index, gap
  std::optional<Rational> a;
  std::optional<Rational> b;
  Window ks{0, 0};
  Window window{0, 0};
  std::vector<ReportEntry> results;  // ascending k

  /// Every entry holds; empty when some entry has no verdict (left side only).
  std::optional<bool> holds() const;
  bool has_errors() const;
};

/// JSON with a stable field order: scenario, mode, parameters, holds, results.
std::string report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace equimorse
