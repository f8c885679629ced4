#pragma once

#include <string>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"

namespace casimir {

struct CheckResult {
  std::string id;           // stable identifier, e.g. "fig1-ratio>9"
  int criterion = 0;        // checklist group 1..10
  std::string description;
  double measured = 0.0;
  std::string expected;     // human-readable acceptance band
  bool passed = false;
  std::string note;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool all_passed() const noexcept;
  [[nodiscard]] std::size_t failures() const noexcept;
};

/// Runs the full acceptance checklist: published thermal-correction
/// percentages, figure claims, force scale, perturbative-vs-Lifshitz agreement
/// and the structural properties of the difference forces.
[[nodiscard]] ValidationReport run_validation(const Constants& k = kCodata2018,
                                              const EngineSpec& spec = {});

}  // namespace casimir
