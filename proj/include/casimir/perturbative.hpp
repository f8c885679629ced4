#pragma once

#include "casimir/quantities.hpp"
#include "casimir/results.hpp"

namespace casimir {

/// Low-temperature, thin-skin expansion of the plate-plate pressure,
///   F0 {1 + t^4/3 - (16/3)(delta/a) [1 - (45 zeta(3) / 8 pi^3) t^3]},
/// with F0 = -pi^2 hbar c / (240 a^4) and t = T / T_eff. Corrections of second
/// and higher order in delta/a are temperature independent and omitted.
[[nodiscard]] ForceResult plate_force_perturbative(Separation a, Temperature T,
                                                   PlasmaWavelength lambda_p,
                                                   const Constants& k = kCodata2018);

/// Sphere-plate counterpart with F0 = -pi^3 hbar c R / (360 a^3):
///   F0 {1 + (45 zeta(3)/pi^3) t^3 - t^4
///       - 4 (delta/a) [1 - (45 zeta(3) / 2 pi^3) t^3 + t^4]}.
[[nodiscard]] ForceResult sphere_force_perturbative(Separation a, Temperature T, Radius R,
                                                    PlasmaWavelength lambda_p,
                                                    const Constants& k = kCodata2018);

/// Zero-temperature ideal-metal limits.
[[nodiscard]] double plate_pressure_zero_temperature(Separation a,
                                                     const Constants& k = kCodata2018);
[[nodiscard]] double sphere_force_zero_temperature(Separation a, Radius R,
                                                   const Constants& k = kCodata2018);

/// Asymptotic form of the zero-frequency TE sphere-plate term,
///   -(k_B T zeta(3) R / 8 a^2) (1 - 4 delta/a + 12 delta^2/a^2).
/// Accurate to better than 0.5% for gold at a >= 0.5 um; the quadrature in the
/// Lifshitz engine is authoritative below that.
[[nodiscard]] double te_zero_frequency_asymptotic(Separation a, Temperature T, Radius R,
                                                  PlasmaWavelength lambda_p,
                                                  const Constants& k = kCodata2018);

/// Separation below which te_zero_frequency_asymptotic is flagged.
inline constexpr double kTeAsymptoticMinSeparation = 0.5e-6;

}  // namespace casimir
