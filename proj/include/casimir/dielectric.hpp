#pragma once

#include <string_view>
#include <variant>

#include "casimir/constants.hpp"
#include "casimir/quantities.hpp"

namespace casimir {

struct IdealMetal {};

/// Plasma-model metal, eps(omega) = 1 - omega_p^2 / omega^2.
struct PlasmaMetal {
  double lambda_p;  // m, > 0

  [[nodiscard]] double plasma_frequency(const Constants& k = kCodata2018) const {
    return 2.0 * k.pi * k.c / lambda_p;
  }
};

class MetalModel {
 public:
  static MetalModel ideal() { return MetalModel(IdealMetal{}); }
  static MetalModel plasma(double lambda_p);
  /// Zero plasma wavelength maps to the ideal metal.
  static MetalModel from(PlasmaWavelength lambda_p);

  [[nodiscard]] bool is_ideal() const noexcept {
    return std::holds_alternative<IdealMetal>(variant_);
  }
  [[nodiscard]] const PlasmaMetal* as_plasma() const noexcept {
    return std::get_if<PlasmaMetal>(&variant_);
  }
  /// Plasma wavelength, 0 for the ideal metal.
  [[nodiscard]] double lambda_p() const noexcept;

 private:
  explicit MetalModel(std::variant<IdealMetal, PlasmaMetal> v) : variant_(v) {}
  std::variant<IdealMetal, PlasmaMetal> variant_;
};

/// Zero-frequency prescription. ModifiedTE drops the transverse-electric
/// reflection at the n = 0 Matsubara term only.
enum class Approach { PlasmaZeroFrequency, ModifiedTE };

[[nodiscard]] std::string_view to_string(Approach a) noexcept;

struct ReflectionPair {
  double r_tm;
  double r_te;
};

/// eps(i xi) = 1 + omega_p^2 / xi^2 for the plasma model; +infinity for the
/// ideal metal. xi = 0 with the plasma model is a DomainError: the engine
/// handles zero frequency analytically.
[[nodiscard]] double permittivity_imaginary(const MetalModel& model, double xi,
                                            const Constants& k = kCodata2018);

/// Fresnel coefficients on the imaginary frequency axis, with
/// q = sqrt(k_perp^2 + xi^2/c^2) and kappa = sqrt(k_perp^2 + eps xi^2/c^2):
///   r_TM = (eps q - kappa) / (eps q + kappa),  r_TE = (q - kappa) / (q + kappa).
/// At xi = 0 the plasma model gives r_TM = 1 and the q-dependent r_TE limit.
[[nodiscard]] ReflectionPair reflection_coefficients(const MetalModel& model, double xi,
                                                     double k_perp,
                                                     const Constants& k = kCodata2018);

/// Squared reflection coefficients together with 1 - r^2, evaluated without
/// cancellation. Used by the Lifshitz integrands.
struct ReflectionSquares {
  double tm;
  double one_minus_tm;
  double te;
  double one_minus_te;
};

/// Dimensionless form used by the engine: y = 2 a q, zeta = 2 a xi / c and
/// omega_p_scaled = 2 a omega_p / c.
[[nodiscard]] ReflectionSquares plasma_reflection_squares(double y, double zeta,
                                                          double omega_p_scaled) noexcept;
[[nodiscard]] constexpr ReflectionSquares ideal_reflection_squares() noexcept {
  return {1.0, 0.0, 1.0, 0.0};
}

}  // namespace casimir
