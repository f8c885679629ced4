#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "casimir/dielectric.hpp"
#include "casimir/quantities.hpp"

namespace casimir {

struct ParallelPlates {};
struct SpherePlate {
  double radius;  // m
};
using Geometry = std::variant<ParallelPlates, SpherePlate>;

enum class Method { Perturbative, LifshitzOracle };

[[nodiscard]] constexpr std::string_view to_string(Method m) noexcept {
  return m == Method::Perturbative ? "perturbative" : "lifshitz-oracle";
}

/// Decomposition of a truncated low-temperature, thin-skin expansion:
///   value = base * (1 + thermal_ideal + conductivity_first_order + cross_term).
/// Conductivity corrections of second and higher order in delta/a are not
/// included; `omitted_from_order` names the first missing order.
struct PerturbativeTerms {
  double base = 0.0;
  double thermal_ideal = 0.0;
  double conductivity_first_order = 0.0;
  double cross_term = 0.0;
  int omitted_from_order = 2;

  [[nodiscard]] double relative_correction() const noexcept {
    return thermal_ideal + conductivity_first_order + cross_term;
  }
};

/// Force (N, sphere-plate) or force per unit area (N/m^2, plates). Negative
/// values are attractive.
struct ForceResult {
  double value = 0.0;
  Geometry geometry = ParallelPlates{};
  Method method = Method::Perturbative;
  Approach approach = Approach::PlasmaZeroFrequency;
  ValidityReport validity;
  std::optional<PerturbativeTerms> terms;
};

}  // namespace casimir
