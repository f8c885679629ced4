#include "casimir/dielectric.hpp"

#include <cmath>
#include <limits>

namespace casimir {

MetalModel MetalModel::plasma(double lambda_p) {
  if (!std::isfinite(lambda_p) || !(lambda_p > 0.0)) {
    throw DomainError("plasma model requires a positive plasma wavelength");
  }
  return MetalModel(PlasmaMetal{lambda_p});
}

MetalModel MetalModel::from(PlasmaWavelength lambda_p) {
  return lambda_p.is_ideal() ? ideal() : plasma(lambda_p.meters());
}

double MetalModel::lambda_p() const noexcept {
  const auto* p = as_plasma();
  return p ? p->lambda_p : 0.0;
}

std::string_view to_string(Approach a) noexcept {
  switch (a) {
    case Approach::PlasmaZeroFrequency:
      return "plasma";
    case Approach::ModifiedTE:
      return "modified-te";
  }
  return "unknown";
}

double permittivity_imaginary(const MetalModel& model, double xi, const Constants& k) {
  if (model.is_ideal()) return std::numeric_limits<double>::infinity();
  if (!std::isfinite(xi) || !(xi > 0.0)) {
    throw DomainError("plasma permittivity requires xi > 0; zero frequency is analytic");
  }
  const double ratio = model.as_plasma()->plasma_frequency(k) / xi;
  return 1.0 + ratio * ratio;
}

ReflectionPair reflection_coefficients(const MetalModel& model, double xi, double k_perp,
                                       const Constants& k) {
  if (!std::isfinite(xi) || !std::isfinite(k_perp) || xi < 0.0 || k_perp < 0.0) {
    throw DomainError("reflection coefficients need finite non-negative xi and k_perp");
  }
  if (xi == 0.0 && k_perp == 0.0) {
    throw DomainError("reflection coefficients undefined at xi = k_perp = 0");
  }
  if (model.is_ideal()) return {1.0, -1.0};

  const double wp_over_c = model.as_plasma()->plasma_frequency(k) / k.c;
  const double xi_over_c = xi / k.c;
  const double q = std::hypot(k_perp, xi_over_c);
  const double kappa = std::hypot(q, wp_over_c);
  // (q - kappa)(q + kappa) = -wp^2/c^2
  const double r_te = -(wp_over_c * wp_over_c) / ((q + kappa) * (q + kappa));
  if (xi == 0.0) return {1.0, r_te};

  const double eps = permittivity_imaginary(model, xi, k);
  const double r_tm = (eps * q - kappa) / (eps * q + kappa);
  return {r_tm, r_te};
}

ReflectionSquares plasma_reflection_squares(double y, double zeta,
                                            double omega_p_scaled) noexcept {
  ReflectionSquares out{};
  const double s = std::hypot(y, omega_p_scaled);
  const double sum = y + s;
  const double r_te = -(omega_p_scaled * omega_p_scaled) / (sum * sum);
  out.te = r_te * r_te;
  out.one_minus_te = 4.0 * y * s / (sum * sum);

  if (zeta == 0.0) {
    out.tm = 1.0;
    out.one_minus_tm = 0.0;
    return out;
  }
  const double ratio = omega_p_scaled / zeta;
  const double u = (1.0 + ratio * ratio) * y;
  const double r_tm = (u - s) / (u + s);
  out.tm = r_tm * r_tm;
  out.one_minus_tm = 4.0 * u * s / ((u + s) * (u + s));
  return out;
}

}  // namespace casimir
