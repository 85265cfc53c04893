#pragma once

// Scenario files: JSON documents with fields
//   name, n, window: [lo, hi], components: [...], reduced: [...],
//   global_cohomology: [...]
// Characters are written in the canonical text form of the character ring.

#include "equimorse/model.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace equimorse {

/// Parses without running validation.
Scenario parse_scenario(std::string_view json_text);

/// Parses and validates; throws Error listing every violation.
Scenario load_scenario_text(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical serialization (stable field order, two-space indent).
std::string scenario_to_json(const Scenario& s);

/// Resolves a scenario path, falling back to $EQUIMORSE_FIXTURES when the
/// path does not exist as given.
std::filesystem::path resolve_scenario_path(const std::filesystem::path& path);

}  // namespace equimorse
