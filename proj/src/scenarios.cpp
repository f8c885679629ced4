#include "casimir/scenarios.hpp"

#include <cmath>

namespace casimir {

DifferenceResult delta_force_plates(Separation a, TemperaturePair pair,
                                    PlasmaWavelength lambda_p, const Constants& k) {
  const double T1 = pair.T1.kelvin();
  const double T2 = pair.T2.kelvin();
  const double delta_over_a = skin_depth_parameter(lambda_p.meters(), k) / a.meters();
  const double T_eff = effective_temperature(a, k);
  const double pi3 = k.pi * k.pi * k.pi;
  const double hc = k.hbar * k.c;

  DifferenceResult r;
  r.factor1 = k.pi * k.pi * std::pow(k.k_B, 4) / (45.0 * hc * hc * hc) *
              (T2 * T2 * T2 * T2 - T1 * T1 * T1 * T1);
  r.factor2 = 1.0 + 90.0 * k.zeta3 / pi3 * delta_over_a * (T_eff / (T1 + T2)) *
                        (1.0 + T1 * T2 / (T1 * T1 + T2 * T2));
  r.delta_F = -r.factor1 * r.factor2;
  r.geometry = ParallelPlates{};
  r.validity = classify_validity(a, pair.T1, pair.T2, lambda_p);
  return r;
}

DifferenceResult delta_force_sphere(Separation a, TemperaturePair pair, Radius R,
                                    PlasmaWavelength lambda_p, Approach approach,
                                    const Constants& k) {
  const double T1 = pair.T1.kelvin();
  const double T2 = pair.T2.kelvin();
  const double am = a.meters();
  const double x = skin_depth_parameter(lambda_p.meters(), k) / am;
  const double T_eff = effective_temperature(a, k);
  const double pi3 = k.pi * k.pi * k.pi;
  const double hc = k.hbar * k.c;

  DifferenceResult r;
  r.factor1 = k.zeta3 * k.k_B * k.k_B * k.k_B / (hc * hc) * ((T2 - T1) * (T1 * T1 + T2 * T2));
  r.factor2 = (1.0 + T1 * T2 / (T1 * T1 + T2 * T2)) * (1.0 + 2.0 * x) -
              pi3 / (45.0 * k.zeta3) * ((T1 + T2) / T_eff) * (1.0 + 4.0 * x);
  if (approach == Approach::ModifiedTE) {
    r.zero_frequency_te_term = k.k_B * k.zeta3 * R.meters() / (8.0 * am * am) * (T2 - T1) *
                               (1.0 - 4.0 * x + 12.0 * x * x);
  }
  r.delta_F = -R.meters() * r.factor1 * r.factor2 + r.zero_frequency_te_term;
  r.approach = approach;
  r.geometry = SpherePlate{R.meters()};
  r.validity = classify_validity(a, pair.T1, pair.T2, lambda_p);
  r.validity.proximity_error_scale = am / R.meters();
  return r;
}

std::vector<double> make_grid(const SweepSpec& spec) {
  if (spec.points < 1) throw DomainError("sweep grid needs at least one point");
  if (!std::isfinite(spec.min) || !std::isfinite(spec.max)) {
    throw DomainError("sweep grid bounds must be finite");
  }
  if (spec.points == 1) {
    if (spec.min != spec.max) throw DomainError("a single-point grid needs min == max");
    return {spec.min};
  }
  if (!(spec.min < spec.max)) throw DomainError("sweep grid needs min < max for more than one point");
  if (spec.spacing == GridSpacing::Logarithmic && !(spec.min > 0.0)) {
    throw DomainError("logarithmic grid needs a positive lower bound");
  }

  std::vector<double> grid(static_cast<std::size_t>(spec.points));
  const double last = static_cast<double>(spec.points - 1);
  for (int i = 0; i < spec.points; ++i) {
    const double f = static_cast<double>(i) / last;
    grid[static_cast<std::size_t>(i)] =
        spec.spacing == GridSpacing::Linear
            ? spec.min + f * (spec.max - spec.min)
            : spec.min * std::exp(f * std::log(spec.max / spec.min));
  }
  grid.front() = spec.min;
  grid.back() = spec.max;
  return grid;
}

SweepSpec default_separation_grid() { return {0.15e-6, 2.0e-6, 75, GridSpacing::Logarithmic}; }

SweepSpec default_temperature_grid() { return {300.0, 350.0, 51, GridSpacing::Linear}; }

std::vector<SeparationRow> sweep_separation(TemperaturePair pair, PlasmaWavelength lambda_p,
                                            SweepGeometry geometry, Approach approach,
                                            const SweepSpec& grid, const Constants& k) {
  const Radius unit_radius(1.0);
  const PlasmaWavelength ideal = PlasmaWavelength::ideal();
  auto evaluate = [&](Separation a, PlasmaWavelength lp) {
    return geometry == SweepGeometry::Plates
               ? delta_force_plates(a, pair, lp, k).delta_F
               : delta_force_sphere(a, pair, unit_radius, lp, approach, k).delta_F;
  };

  std::vector<SeparationRow> rows;
  for (double a_m : make_grid(grid)) {
    const Separation a(a_m);
    rows.push_back({a_m, evaluate(a, lambda_p), evaluate(a, ideal)});
  }
  return rows;
}

std::vector<TemperatureRow> sweep_temperature(Separation a, Temperature T1,
                                              const SweepSpec& T2_grid, PlasmaWavelength lambda_p,
                                              const Constants& k) {
  const Radius unit_radius(1.0);
  std::vector<TemperatureRow> rows;
  for (double T2 : make_grid(T2_grid)) {
    const TemperaturePair pair{T1, Temperature(T2)};
    rows.push_back({
        T2,
        delta_force_sphere(a, pair, unit_radius, lambda_p, Approach::PlasmaZeroFrequency, k)
            .delta_F,
        delta_force_sphere(a, pair, unit_radius, lambda_p, Approach::ModifiedTE, k).delta_F,
        delta_force_sphere(a, pair, unit_radius, PlasmaWavelength::ideal(),
                           Approach::PlasmaZeroFrequency, k)
            .delta_F,
    });
  }
  return rows;
}

}  // namespace casimir
