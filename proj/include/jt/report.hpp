#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace jt {

struct AxiomResult {
  std::string axiom;
  bool pass = true;
  double residual = 0.0;
};

struct AxiomReport {
  std::vector<AxiomResult> entries;

  void add(std::string axiom, bool pass, double residual) { entries.push_back({std::move(axiom), pass, residual}); }
  bool all_pass() const;
  const AxiomResult* find(const std::string& axiom) const;
};

nlohmann::ordered_json to_json(const AxiomResult& r);
nlohmann::ordered_json to_json(const AxiomReport& r);
std::string to_text(const AxiomReport& r, const std::string& indent = "");

// %.3e
std::string format_residual(double r);

}  // namespace jt
