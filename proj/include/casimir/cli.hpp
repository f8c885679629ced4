#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "casimir/lifshitz.hpp"

namespace casimir::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNumericalFailure = 2,
  kValidationFailure = 3,
};

/// Everything a run depends on. Outputs embed the resolved config, so a run
/// is reproducible from its header alone.
struct RunConfig {
  std::string command;           // fig1 | fig2 | fig3 | compute | validate
  std::string geometry = "sphere";
  std::string approach = "plasma";  // plasma | modified-te | ideal
  double lambda_p_nm = 136.0;
  double t1_k = 300.0;
  double t2_k = 350.0;
  double a_um = 0.5;
  double a_min_um = 0.15;
  double a_max_um = 2.0;
  std::optional<int> points;     // per-command default when unset
  double radius_mm = 2.0;
  std::string format = "csv";
  bool oracle = false;
  double tail_tolerance = 1e-9;
  double quadrature_tolerance = 1e-9;
  double skew_constants = 0.0;   // validation sensitivity hook
  std::string output;

  [[nodiscard]] EngineSpec engine_spec() const;
};

/// Applies CASIMIR_DELTA_PRECISION ("tol" or "tail_tol,quad_tol") to the
/// tolerances. Returns false if the value does not parse.
bool apply_precision_override(RunConfig& config, const char* value);

/// Formats a value with 9 significant digits; the only float formatting used
/// in outputs.
[[nodiscard]] std::string format_number(double v);

/// Parses `args` (args[0] is the program name), runs the command and returns
/// the process exit code. Data goes to `out` unless --output is given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Executes an already-parsed configuration.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
