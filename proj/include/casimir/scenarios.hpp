#pragma once

#include <vector>

#include "casimir/dielectric.hpp"
#include "casimir/quantities.hpp"
#include "casimir/results.hpp"

namespace casimir {

/// Equilibrium temperatures before and after heating. The difference
/// operations accept either ordering and are antisymmetric under exchange.
struct TemperaturePair {
  Temperature T1;
  Temperature T2;
};

/// delta_F = F(a, T2) - F(a, T1) = -factor1 * factor2 (times R for the sphere)
/// + zero_frequency_te_term.
struct DifferenceResult {
  double delta_F = 0.0;
  double factor1 = 0.0;
  double factor2 = 0.0;
  double zero_frequency_te_term = 0.0;  // nonzero only for ModifiedTE
  Approach approach = Approach::PlasmaZeroFrequency;
  Geometry geometry = ParallelPlates{};
  ValidityReport validity;
};

/// Plates, N/m^2:
///   factor1 = pi^2 k_B^4 (T2^4 - T1^4) / (45 hbar^3 c^3)
///   factor2 = 1 + (90 zeta(3)/pi^3)(delta/a)(T_eff/(T1+T2))(1 + T1 T2/(T1^2+T2^2))
[[nodiscard]] DifferenceResult delta_force_plates(Separation a, TemperaturePair pair,
                                                  PlasmaWavelength lambda_p,
                                                  const Constants& k = kCodata2018);

/// Sphere-plate, N:
///   factor1 = zeta(3) k_B^3 (T2 - T1)(T1^2 + T2^2) / (hbar^2 c^2)
///   factor2 = (1 + T1 T2/(T1^2+T2^2))(1 + 2 delta/a)
///             - (pi^3 / 45 zeta(3)) ((T1+T2)/T_eff)(1 + 4 delta/a)
/// ModifiedTE adds (k_B zeta(3) R / 8 a^2)(T2 - T1)(1 - 4 delta/a + 12 delta^2/a^2),
/// the removed zero-frequency TE contribution.
[[nodiscard]] DifferenceResult delta_force_sphere(Separation a, TemperaturePair pair, Radius R,
                                                  PlasmaWavelength lambda_p, Approach approach,
                                                  const Constants& k = kCodata2018);

enum class GridSpacing { Linear, Logarithmic };

struct SweepSpec {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  GridSpacing spacing = GridSpacing::Linear;
};

/// Grid points from min to max inclusive. A single point needs min == max;
/// more than one needs min < max. Logarithmic grids need min > 0.
[[nodiscard]] std::vector<double> make_grid(const SweepSpec& spec);

/// 75 log-spaced separations in [0.15, 2] um (meters).
[[nodiscard]] SweepSpec default_separation_grid();
/// 51 linear upper temperatures in [300, 350] K.
[[nodiscard]] SweepSpec default_temperature_grid();

enum class SweepGeometry { Plates, Sphere };

struct SeparationRow {
  double a;      // m
  double real;   // N/m^2 (plates) or N/m (sphere, per unit radius)
  double ideal;  // same units, ideal-metal companion
};

[[nodiscard]] std::vector<SeparationRow> sweep_separation(TemperaturePair pair,
                                                          PlasmaWavelength lambda_p,
                                                          SweepGeometry geometry,
                                                          Approach approach,
                                                          const SweepSpec& grid,
                                                          const Constants& k = kCodata2018);

struct TemperatureRow {
  double T2;           // K
  double plasma;       // delta_F / R, N/m
  double modified_te;  // delta_F / R, N/m
  double ideal;        // delta_F / R, N/m, ideal metal
};

[[nodiscard]] std::vector<TemperatureRow> sweep_temperature(Separation a, Temperature T1,
                                                            const SweepSpec& T2_grid,
                                                            PlasmaWavelength lambda_p,
                                                            const Constants& k = kCodata2018);

}  // namespace casimir
