#pragma once

#include "casimir/dielectric.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/quantities.hpp"
#include "casimir/results.hpp"

namespace casimir {

struct MatsubaraSpec {
  double relative_tail_tolerance = 1e-9;
  long max_terms = 100000;
};

struct EngineSpec {
  MatsubaraSpec matsubara;
  QuadratureSpec quadrature;
};

/// A converged Matsubara sum with its bookkeeping.
struct MatsubaraSum {
  double value = 0.0;
  long terms = 0;              // number of frequencies evaluated, n = 0 included
  double tail_estimate = 0.0;  // estimated magnitude of the truncated remainder
};

// Finite-temperature Lifshitz formula for two identical half-spaces at
// separation a, in the dimensionless variables y = 2 a q and
// zeta_n = 2 a xi_n / c, xi_n = 2 pi k_B T n / hbar:
//
//   F/A = k_B T / (8 pi a^2) sum'_n int_{zeta_n}^inf y dy
//           sum_{TM,TE} ln(1 - r^2 e^{-y})
//   P   = -k_B T / (8 pi a^3) sum'_n int_{zeta_n}^inf y^2 dy
//           sum_{TM,TE} r^2 e^{-y} / (1 - r^2 e^{-y})
//
// The primed sum weights n = 0 by 1/2. Under Approach::ModifiedTE the TE
// reflection is zeroed at n = 0 only.

/// Free energy per unit area, J/m^2.
[[nodiscard]] MatsubaraSum plate_free_energy_sum(Separation a, Temperature T,
                                                 const MetalModel& model, Approach approach,
                                                 const EngineSpec& spec = {},
                                                 const Constants& k = kCodata2018);

[[nodiscard]] double plate_free_energy_per_area(Separation a, Temperature T,
                                                const MetalModel& model, Approach approach,
                                                const EngineSpec& spec = {},
                                                const Constants& k = kCodata2018);

/// Pressure between the plates (N/m^2) from its own Matsubara sum.
[[nodiscard]] MatsubaraSum plate_pressure_sum(Separation a, Temperature T, const MetalModel& model,
                                              Approach approach, const EngineSpec& spec = {},
                                              const Constants& k = kCodata2018);

[[nodiscard]] ForceResult plate_pressure(Separation a, Temperature T, const MetalModel& model,
                                         Approach approach, const EngineSpec& spec = {},
                                         const Constants& k = kCodata2018);

/// Proximity-force sphere-plate force: 2 pi R times the plate free energy per
/// area. The validity report records a/R.
[[nodiscard]] ForceResult sphere_plate_force_pfa(Separation a, Temperature T, Radius R,
                                                 const MetalModel& model, Approach approach,
                                                 const EngineSpec& spec = {},
                                                 const Constants& k = kCodata2018);

/// The half-weighted n = 0 transverse-electric term of the free energy per
/// area. This is exactly what ModifiedTE removes.
[[nodiscard]] double zero_frequency_te_free_energy(Separation a, Temperature T,
                                                   const MetalModel& model,
                                                   const QuadratureSpec& spec = {},
                                                   const Constants& k = kCodata2018);

/// Zero-frequency TE contribution to the sphere-plate force,
///   (k_B T R / 8 a^2) int_0^inf y ln[1 - r_TE(y)^2 e^{-y}] dy,
/// r_TE = (y - sqrt(w^2 + y^2)) / (y + sqrt(w^2 + y^2)), w = 2 a omega_p / c.
/// Plasma model only.
[[nodiscard]] double te_zero_frequency_sphere_term(Separation a, Temperature T, Radius R,
                                                   PlasmaWavelength lambda_p,
                                                   const QuadratureSpec& spec = {},
                                                   const Constants& k = kCodata2018);

}  // namespace casimir
