// Report assembly and rendering.  A ResultReport is built once from an
// EngineContext and rendered to text, JSON (schema "perdomcoh-report/1"),
// or CSV; identical config and tool version produce byte-identical output.
#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "perdomcoh/config_io.hpp"
#include "perdomcoh/engine.hpp"

namespace pdc {

inline constexpr const char* kToolVersion = "perdomcoh 1.0.0";

// FNV-1a 64-bit over the canonical config serialization.
std::string config_hash(const ScenarioConfig& c);

struct ResultReport {
  nlohmann::ordered_json j;  // full structured report

  std::string render_json() const;  // pretty, 2-space indent, trailing newline
  std::string render_text() const;  // aligned tables
  std::string render_csv() const;   // summand table only
  std::string render(const std::string& format) const;
};

// Runs validation (already done), the summand table when the domain is
// non-empty, and the requested checks/pages.  `validation_only` reports are
// produced for datums that fail validation (summands omitted).
ResultReport build_report(const ScenarioConfig& cfg, const EngineContext& ctx,
                          const RunOptions& opts);
ResultReport build_failure_report(const ScenarioConfig& cfg, const ValidationReport& report);

}  // namespace pdc
