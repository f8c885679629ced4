#include "casimir/lifshitz.hpp"

#include <cmath>
#include <cstdio>

namespace casimir {
namespace {

enum class Quantity { FreeEnergy, Pressure };

/// Material in the dimensionless variables of the integrands.
struct ScaledMetal {
  bool ideal;
  double omega_p;  // 2 a omega_p / c

  [[nodiscard]] ReflectionSquares at(double y, double zeta) const noexcept {
    return ideal ? ideal_reflection_squares() : plasma_reflection_squares(y, zeta, omega_p);
  }
};

ScaledMetal scale(const MetalModel& model, Separation a, const Constants& k) {
  if (const auto* p = model.as_plasma()) {
    return {false, 2.0 * a.meters() * p->plasma_frequency(k) / k.c};
  }
  return {true, 0.0};
}

// ln(1 - r^2 e^{-y}). Near 1 the argument goes through log1p; near 0 it is
// formed as (1 - r^2) - r^2 expm1(-y) to keep the small-y, |r| -> 1 limit exact.
inline double log_mode(double r2, double one_minus_r2, double e, double em1) noexcept {
  const double x = r2 * e;
  return x < 0.5 ? std::log1p(-x) : std::log(one_minus_r2 - r2 * em1);
}

inline double occupation_mode(double r2, double one_minus_r2, double e, double em1) noexcept {
  return r2 * e / (one_minus_r2 - r2 * em1);
}

double matsubara_term(Quantity quantity, const ScaledMetal& metal, double zeta, bool drop_te,
                      const QuadratureSpec& spec) {
  const int power = quantity == Quantity::FreeEnergy ? 1 : 2;
  auto integrand = [&](double y) {
    ReflectionSquares r = metal.at(y, zeta);
    if (drop_te) {
      r.te = 0.0;
      r.one_minus_te = 1.0;
    }
    const double em1 = std::expm1(-y);
    const double e = std::exp(-y);
    if (quantity == Quantity::FreeEnergy) {
      return y * (log_mode(r.tm, r.one_minus_tm, e, em1) + log_mode(r.te, r.one_minus_te, e, em1));
    }
    return y * y *
           (occupation_mode(r.tm, r.one_minus_tm, e, em1) +
            occupation_mode(r.te, r.one_minus_te, e, em1));
  };
  // Both polarizations contribute at most one bound each.
  auto bound = [power](double Y) { return 2.0 * lifshitz_tail_bound(power, Y); };
  return integrate_exponential_tail(integrand, zeta, bound, spec).value;
}

MatsubaraSum matsubara_sum(Quantity quantity, Separation a, Temperature T, const MetalModel& model,
                           Approach approach, const EngineSpec& spec, const Constants& k) {
  const ScaledMetal metal = scale(model, a, k);
  const double zeta1 = 4.0 * k.pi * a.meters() * k.k_B * T.kelvin() / (k.hbar * k.c);
  const double tol = spec.matsubara.relative_tail_tolerance;

  MatsubaraSum out;
  double previous = 0.0;
  for (long n = 0; n < spec.matsubara.max_terms; ++n) {
    const bool drop_te = n == 0 && approach == Approach::ModifiedTE;
    const double term =
        matsubara_term(quantity, metal, zeta1 * static_cast<double>(n), drop_te, spec.quadrature);
    out.value += n == 0 ? 0.5 * term : term;
    out.terms = n + 1;

    if (n >= 2) {
      if (term == 0.0) {
        out.tail_estimate = 0.0;
        return out;
      }
      // Terms decay like poly(zeta) e^{-zeta}; the current ratio bounds all
      // later ratios, so the geometric tail is an overestimate.
      const double ratio = term / previous;
      if (ratio >= 0.0 && ratio < 1.0) {
        out.tail_estimate = std::abs(term) * ratio / (1.0 - ratio);
        if (out.tail_estimate <= tol * std::abs(out.value)) return out;
      }
    }
    previous = term;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "Matsubara sum not converged after %ld terms (a = %.4g m, T = %.4g K)",
                spec.matsubara.max_terms, a.meters(), T.kelvin());
  throw NumericalError(buf);
}

}  // namespace

MatsubaraSum plate_free_energy_sum(Separation a, Temperature T, const MetalModel& model,
                                   Approach approach, const EngineSpec& spec, const Constants& k) {
  MatsubaraSum s = matsubara_sum(Quantity::FreeEnergy, a, T, model, approach, spec, k);
  const double prefactor = k.k_B * T.kelvin() / (8.0 * k.pi * a.meters() * a.meters());
  s.value *= prefactor;
  s.tail_estimate *= prefactor;
  return s;
}

double plate_free_energy_per_area(Separation a, Temperature T, const MetalModel& model,
                                  Approach approach, const EngineSpec& spec, const Constants& k) {
  return plate_free_energy_sum(a, T, model, approach, spec, k).value;
}

MatsubaraSum plate_pressure_sum(Separation a, Temperature T, const MetalModel& model,
                                Approach approach, const EngineSpec& spec, const Constants& k) {
  MatsubaraSum s = matsubara_sum(Quantity::Pressure, a, T, model, approach, spec, k);
  const double am = a.meters();
  const double prefactor = -k.k_B * T.kelvin() / (8.0 * k.pi * am * am * am);
  s.value *= prefactor;
  s.tail_estimate *= std::abs(prefactor);
  return s;
}

ForceResult plate_pressure(Separation a, Temperature T, const MetalModel& model,
                           Approach approach, const EngineSpec& spec, const Constants& k) {
  ForceResult r;
  r.value = plate_pressure_sum(a, T, model, approach, spec, k).value;
  r.geometry = ParallelPlates{};
  r.method = Method::LifshitzOracle;
  r.approach = approach;
  r.validity = classify_validity(a, T, PlasmaWavelength(model.lambda_p()));
  return r;
}

ForceResult sphere_plate_force_pfa(Separation a, Temperature T, Radius R,
                                   const MetalModel& model, Approach approach,
                                   const EngineSpec& spec, const Constants& k) {
  ForceResult r;
  r.value = 2.0 * k.pi * R.meters() * plate_free_energy_per_area(a, T, model, approach, spec, k);
  r.geometry = SpherePlate{R.meters()};
  r.method = Method::LifshitzOracle;
  r.approach = approach;
  r.validity = classify_validity(a, T, PlasmaWavelength(model.lambda_p()));
  r.validity.proximity_error_scale = a.meters() / R.meters();
  return r;
}

double zero_frequency_te_free_energy(Separation a, Temperature T, const MetalModel& model,
                                     const QuadratureSpec& spec, const Constants& k) {
  const ScaledMetal metal = scale(model, a, k);
  auto integrand = [&](double y) {
    const ReflectionSquares r = metal.at(y, 0.0);
    return y * log_mode(r.te, r.one_minus_te, std::exp(-y), std::expm1(-y));
  };
  auto bound = [](double Y) { return lifshitz_tail_bound(1, Y); };
  const double integral = integrate_exponential_tail(integrand, 0.0, bound, spec).value;
  return 0.5 * k.k_B * T.kelvin() / (8.0 * k.pi * a.meters() * a.meters()) * integral;
}

double te_zero_frequency_sphere_term(Separation a, Temperature T, Radius R,
                                     PlasmaWavelength lambda_p, const QuadratureSpec& spec,
                                     const Constants& k) {
  if (lambda_p.is_ideal()) {
    throw DomainError("zero-frequency TE quadrature is defined for the plasma model only");
  }
  return 2.0 * k.pi * R.meters() *
         zero_frequency_te_free_energy(a, T, MetalModel::from(lambda_p), spec, k);
}

}  // namespace casimir
