#pragma once

#include <cstdint>
#include <string>

#include "jt/forms.hpp"
#include "json.hpp"

namespace jt {

struct ReportOptions {
  int postulate_samples = 20;
  std::uint64_t seed = 1;
  bool require_c1 = false;
  std::size_t max_depth = 0;
};

// Each section carries a top-level "pass" flag.
nlohmann::ordered_json validation_section(const FiniteTriple& t, const ReportOptions& opt);
nlohmann::ordered_json gauge_section(const FiniteTriple& t, const ReportOptions& opt);
// mode: "minimal", "general", or "both"
nlohmann::ordered_json fluctuation_section(const FiniteTriple& t, const std::string& mode, const ReportOptions& opt);

nlohmann::ordered_json model_report(const FiniteTriple& t, const ReportOptions& opt = {});

// Indented key: value rendering of a report document.
std::string render_text(const nlohmann::ordered_json& doc);

}  // namespace jt
