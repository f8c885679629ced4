#include "casimir/quantities.hpp"

#include <cmath>
#include <cstdio>

namespace casimir {
namespace {

double require_positive(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw DomainError(std::string(what) + " must be finite and positive, got " +
                      std::to_string(v));
  }
  return v;
}

}  // namespace

Separation::Separation(double meters) : meters_(require_positive(meters, "separation")) {}

Temperature::Temperature(double kelvin) : kelvin_(require_positive(kelvin, "temperature")) {}

PlasmaWavelength::PlasmaWavelength(double meters) : meters_(meters) {
  if (!std::isfinite(meters) || meters < 0.0) {
    throw DomainError("plasma wavelength must be finite and non-negative, got " +
                      std::to_string(meters));
  }
}

Radius::Radius(double meters) : meters_(require_positive(meters, "sphere radius")) {}

double effective_temperature(Separation a, const Constants& k) {
  return k.hbar * k.c / (2.0 * a.meters() * k.k_B);
}

double skin_depth_parameter(double lambda_p, const Constants& k) {
  if (!std::isfinite(lambda_p) || lambda_p < 0.0) {
    throw DomainError("plasma wavelength must be finite and non-negative");
  }
  return lambda_p / (2.0 * k.pi);
}

DerivedScales derived_scales(Separation a, Temperature T, PlasmaWavelength lambda_p,
                             const Constants& k) {
  DerivedScales s{};
  s.T_eff = effective_temperature(a, k);
  s.delta = skin_depth_parameter(lambda_p.meters(), k);
  s.delta_over_a = s.delta / a.meters();
  s.T_over_Teff = T.kelvin() / s.T_eff;
  return s;
}

std::vector<std::string> ValidityReport::warnings() const {
  std::vector<std::string> out;
  if (separation_below_plasma_wavelength) {
    out.emplace_back("separation below plasma wavelength: perturbative expansion in delta/a not reliable");
  }
  if (separation_above_max) {
    out.emplace_back("separation above 2 um: low-temperature expansion not reliable");
  }
  if (temperature_above_max) {
    out.emplace_back("temperature above 350 K: low-temperature expansion not reliable");
  }
  if (proximity_error_scale > 0.01) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "a/R = %.3g: proximity-force error exceeds 1%%",
                  proximity_error_scale);
    out.emplace_back(buf);
  }
  return out;
}

ValidityReport classify_validity(Separation a, Temperature T1, Temperature T2,
                                 PlasmaWavelength lambda_p) {
  ValidityReport r;
  r.separation_below_plasma_wavelength = a.meters() < lambda_p.meters();
  r.separation_above_max = a.meters() > kMaxValidSeparation;
  r.temperature_above_max =
      T1.kelvin() > kMaxValidTemperature || T2.kelvin() > kMaxValidTemperature;
  return r;
}

ValidityReport classify_validity(Separation a, Temperature T, PlasmaWavelength lambda_p) {
  return classify_validity(a, T, T, lambda_p);
}

}  // namespace casimir
