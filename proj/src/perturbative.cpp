#include "casimir/perturbative.hpp"

#include <cmath>

namespace casimir {

double plate_pressure_zero_temperature(Separation a, const Constants& k) {
  const double a2 = a.meters() * a.meters();
  return -k.pi * k.pi * k.hbar * k.c / (240.0 * a2 * a2);
}

double sphere_force_zero_temperature(Separation a, Radius R, const Constants& k) {
  const double am = a.meters();
  return -k.pi * k.pi * k.pi * k.hbar * k.c * R.meters() / (360.0 * am * am * am);
}

ForceResult plate_force_perturbative(Separation a, Temperature T, PlasmaWavelength lambda_p,
                                     const Constants& k) {
  const DerivedScales s = derived_scales(a, T, lambda_p, k);
  const double t3 = s.T_over_Teff * s.T_over_Teff * s.T_over_Teff;
  const double t4 = t3 * s.T_over_Teff;
  const double pi3 = k.pi * k.pi * k.pi;

  PerturbativeTerms terms;
  terms.base = plate_pressure_zero_temperature(a, k);
  terms.thermal_ideal = t4 / 3.0;
  terms.conductivity_first_order = -16.0 / 3.0 * s.delta_over_a;
  terms.cross_term = 16.0 / 3.0 * s.delta_over_a * (45.0 * k.zeta3 / (8.0 * pi3)) * t3;

  ForceResult r;
  r.value = terms.base *
            (((1.0 + terms.thermal_ideal) + terms.conductivity_first_order) + terms.cross_term);
  r.geometry = ParallelPlates{};
  r.method = Method::Perturbative;
  r.validity = classify_validity(a, T, lambda_p);
  r.terms = terms;
  return r;
}

ForceResult sphere_force_perturbative(Separation a, Temperature T, Radius R,
                                      PlasmaWavelength lambda_p, const Constants& k) {
  const DerivedScales s = derived_scales(a, T, lambda_p, k);
  const double t3 = s.T_over_Teff * s.T_over_Teff * s.T_over_Teff;
  const double t4 = t3 * s.T_over_Teff;
  const double pi3 = k.pi * k.pi * k.pi;

  PerturbativeTerms terms;
  terms.base = sphere_force_zero_temperature(a, R, k);
  terms.thermal_ideal = 45.0 * k.zeta3 / pi3 * t3 - t4;
  terms.conductivity_first_order = -4.0 * s.delta_over_a;
  terms.cross_term = -4.0 * s.delta_over_a * (-45.0 * k.zeta3 / (2.0 * pi3) * t3 + t4);

  ForceResult r;
  r.value = terms.base *
            (((1.0 + terms.thermal_ideal) + terms.conductivity_first_order) + terms.cross_term);
  r.geometry = SpherePlate{R.meters()};
  r.method = Method::Perturbative;
  r.validity = classify_validity(a, T, lambda_p);
  r.validity.proximity_error_scale = a.meters() / R.meters();
  r.terms = terms;
  return r;
}

double te_zero_frequency_asymptotic(Separation a, Temperature T, Radius R,
                                    PlasmaWavelength lambda_p, const Constants& k) {
  const double x = skin_depth_parameter(lambda_p.meters(), k) / a.meters();
  const double am = a.meters();
  return -k.k_B * T.kelvin() * k.zeta3 * R.meters() / (8.0 * am * am) *
         (1.0 - 4.0 * x + 12.0 * x * x);
}

}  // namespace casimir
