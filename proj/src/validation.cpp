#include "casimir/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "casimir/perturbative.hpp"
#include "casimir/scenarios.hpp"

namespace casimir {
namespace {

std::string fmt(const char* pattern, double v) {
  char buf[128];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

double rel_dev(double measured, double reference) {
  return std::abs(measured - reference) / std::abs(reference);
}

class Checklist {
 public:
  explicit Checklist(ValidationReport& report) : report_(report) {}

  void add(int criterion, std::string id, std::string description, double measured,
           std::string expected, bool passed, std::string note = {}) {
    report_.checks.push_back({std::move(id), criterion, std::move(description), measured,
                              std::move(expected), passed, std::move(note)});
  }

  void relative(int criterion, std::string id, std::string description, double measured,
                double reference, double tolerance, std::string note = {}) {
    const double dev = rel_dev(measured, reference);
    char band[96];
    std::snprintf(band, sizeof band, "%.6g within %.3g%% relative", reference, tolerance * 100.0);
    add(criterion, std::move(id), std::move(description), measured, band, dev <= tolerance,
        note.empty() ? fmt("deviation %.4g", dev) : std::move(note));
  }

  void interval(int criterion, std::string id, std::string description, double measured,
                double lo, double hi, bool open, std::string note = {}) {
    char band[96];
    std::snprintf(band, sizeof band, open ? "in (%.6g, %.6g)" : "in [%.6g, %.6g]", lo, hi);
    const bool ok = open ? (measured > lo && measured < hi) : (measured >= lo && measured <= hi);
    add(criterion, std::move(id), std::move(description), measured, band, ok, std::move(note));
  }

 private:
  ValidationReport& report_;
};

constexpr double kAu = kGoldPlasmaWavelength;

Separation um(double v) { return Separation::from_micrometers(v); }

}  // namespace

bool ValidationReport::all_passed() const noexcept { return failures() == 0; }

std::size_t ValidationReport::failures() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

ValidationReport run_validation(const Constants& k, const EngineSpec& spec) {
  ValidationReport report;
  Checklist list(report);

  const Temperature T300(300.0);
  const Temperature T350(350.0);
  const TemperaturePair pair{T300, T350};
  const PlasmaWavelength gold(kAu);
  const PlasmaWavelength ideal = PlasmaWavelength::ideal();
  const MetalModel gold_model = MetalModel::from(gold);
  const Radius R1mm = Radius::from_millimeters(1.0);
  const Radius R2mm = Radius::from_millimeters(2.0);

  // 1, 2: ideal-metal thermal corrections at 300 K, in percent.
  auto plate_pct = [&](double a) {
    return 100.0 * plate_force_perturbative(um(a), T300, ideal, k).terms->thermal_ideal;
  };
  auto sphere_pct = [&](double a) {
    return 100.0 * sphere_force_perturbative(um(a), T300, R1mm, ideal, k).terms->thermal_ideal;
  };
  list.relative(1, "plate-thermal-1um", "ideal plates, 300 K, a = 1 um: thermal correction [%]",
                plate_pct(1.0), 0.16, 0.10);
  list.relative(1, "plate-thermal-2um", "ideal plates, 300 K, a = 2 um: thermal correction [%]",
                plate_pct(2.0), 2.5, 0.10);
  list.relative(2, "sphere-thermal-1um", "ideal sphere-plate, 300 K, a = 1 um: thermal correction [%]",
                sphere_pct(1.0), 2.7, 0.10);
  list.interval(2, "sphere-thermal-2um", "ideal sphere-plate, 300 K, a = 2 um: thermal correction [%]",
                sphere_pct(2.0), 17.0, 19.0, false,
                "published 18.2% comes from the exact treatment; the truncated expansion omits "
                "terms of order exp(-2 pi T_eff / T)");

  // 3, 4: figure ratios between the ends of the separation range.
  {
    const double r = delta_force_plates(um(0.15), pair, gold, k).delta_F /
                     delta_force_plates(um(2.0), pair, gold, k).delta_F;
    list.interval(3, "fig1-ratio>9", "|dF_pp(0.15 um)| / |dF_pp(2 um)|, Au, 300 -> 350 K", r, 9.0,
                  10.0, true);
  }
  {
    const Radius unit(1.0);
    auto f = [&](double a) {
      return delta_force_sphere(um(a), pair, unit, gold, Approach::PlasmaZeroFrequency, k).delta_F;
    };
    list.interval(4, "fig2-ratio>2", "|dF_ps/R(0.15 um)| / |dF_ps/R(2 um)|, Au, 300 -> 350 K",
                  f(0.15) / f(2.0), 2.0, 2.5, true);
  }

  // 5: the two zero-frequency prescriptions at a = 0.5 um.
  {
    const Radius unit(1.0);
    const double plasma =
        delta_force_sphere(um(0.5), pair, unit, gold, Approach::PlasmaZeroFrequency, k).delta_F;
    const double modified =
        delta_force_sphere(um(0.5), pair, unit, gold, Approach::ModifiedTE, k).delta_F;
    list.interval(5, "fig3-ratio>6", "|dF_ps(modified TE)| / |dF_ps(plasma)| at T2 = 350 K",
                  std::abs(modified / plasma), 6.0, INFINITY, true);
    list.add(5, "fig3-modified-te-positive", "modified-TE dF_ps/R at T2 = 350 K is positive",
             modified, "> 0", modified > 0.0);
    list.add(5, "fig3-plasma-negative", "plasma dF_ps/R at T2 = 350 K is negative", plasma, "< 0",
             plasma < 0.0);

    double worst = 0.0;
    for (const auto& row : sweep_temperature(um(0.5), T300, default_temperature_grid(), gold, k)) {
      if (row.plasma == 0.0) continue;  // T2 = T1
      worst = std::max(worst, rel_dev(row.ideal, row.plasma));
    }
    list.add(5, "fig3-ideal-coincides", "max relative gap, ideal vs plasma curve over T2 grid",
             worst, "<= 0.1", worst <= 0.10);
  }

  // 6: absolute scale of the proposed measurement.
  {
    const double f =
        delta_force_sphere(um(0.5), pair, R2mm, gold, Approach::PlasmaZeroFrequency, k).delta_F;
    list.interval(6, "force-scale-1e-13", "|dF_ps| [N], a = 0.5 um, R = 2 mm, 300 -> 350 K",
                  std::abs(f), 0.5e-13, 2e-13, false);
  }

  // 7: perturbative plate force vs Lifshitz pressure.
  for (double a : {0.5, 0.7, 1.0}) {
    for (const Temperature T : {T300, T350}) {
      const double pert = plate_force_perturbative(um(a), T, gold, k).value;
      const double oracle =
          plate_pressure(um(a), T, gold_model, Approach::PlasmaZeroFrequency, spec, k).value;
      char id[64];
      std::snprintf(id, sizeof id, "oracle-plate-a%.1fum-T%.0fK", a, T.kelvin());
      list.relative(7, id, "perturbative plate pressure vs Lifshitz sum", pert, oracle, 0.03);
    }
  }

  // 8: difference forces vs finite differences of the Lifshitz engine.
  for (double a : {0.3, 0.5, 1.0}) {
    const double dP =
        plate_pressure(um(a), T350, gold_model, Approach::PlasmaZeroFrequency, spec, k).value -
        plate_pressure(um(a), T300, gold_model, Approach::PlasmaZeroFrequency, spec, k).value;
    char id[64];
    std::snprintf(id, sizeof id, "oracle-delta-plates-a%.1fum", a);
    list.relative(8, id, "dF_pp closed form vs Lifshitz P(350 K) - P(300 K)",
                  delta_force_plates(um(a), pair, gold, k).delta_F, dP, 0.05);

    const double dF =
        sphere_plate_force_pfa(um(a), T350, R1mm, gold_model, Approach::PlasmaZeroFrequency, spec, k)
            .value -
        sphere_plate_force_pfa(um(a), T300, R1mm, gold_model, Approach::PlasmaZeroFrequency, spec, k)
            .value;
    std::snprintf(id, sizeof id, "oracle-delta-sphere-a%.1fum", a);
    list.relative(8, id, "dF_ps closed form vs Lifshitz PFA F(350 K) - F(300 K)",
                  delta_force_sphere(um(a), pair, R1mm, gold, Approach::PlasmaZeroFrequency, k)
                      .delta_F,
                  dF, 0.05);
  }

  // 9: zero-frequency TE term, quadrature vs asymptotic series.
  for (double a : {0.5, 1.0, 2.0}) {
    const double quad = te_zero_frequency_sphere_term(um(a), T300, R1mm, gold, spec.quadrature, k);
    const double asym = te_zero_frequency_asymptotic(um(a), T300, R1mm, gold, k);
    char id[64];
    std::snprintf(id, sizeof id, "te-asymptotic-a%.1fum", a);
    list.relative(9, id, "zero-frequency TE term: asymptotic series vs quadrature", asym, quad,
                  0.005);
  }
  {
    const PlasmaWavelength tiny(1e-12);
    const double quad = te_zero_frequency_sphere_term(um(1.0), T300, R1mm, tiny, spec.quadrature, k);
    const double limit = -k.k_B * 300.0 * k.zeta3 * R1mm.meters() / (8.0 * 1e-12);
    list.relative(9, "te-ideal-limit", "zero-frequency TE quadrature at lambda_p = 1e-12 m, a = 1 um",
                  quad, limit, 1e-6);
  }

  // 10: structural properties.
  {
    const TemperaturePair swapped{T350, T300};
    bool antisym = true;
    bool zero = true;
    for (double a : {0.15, 0.5, 1.0, 2.0}) {
      antisym &= delta_force_plates(um(a), pair, gold, k).delta_F ==
                 -delta_force_plates(um(a), swapped, gold, k).delta_F;
      zero &= delta_force_plates(um(a), {T300, T300}, gold, k).delta_F == 0.0;
      for (Approach ap : {Approach::PlasmaZeroFrequency, Approach::ModifiedTE}) {
        antisym &= delta_force_sphere(um(a), pair, R1mm, gold, ap, k).delta_F ==
                   -delta_force_sphere(um(a), swapped, R1mm, gold, ap, k).delta_F;
        zero &= delta_force_sphere(um(a), {T300, T300}, R1mm, gold, ap, k).delta_F == 0.0;
      }
    }
    list.add(10, "antisymmetry", "dF(T1, T2) == -dF(T2, T1) exactly", antisym ? 1.0 : 0.0, "exact",
             antisym);
    list.add(10, "zero-at-equal-temperatures", "dF(T, T) == 0 exactly", zero ? 1.0 : 0.0, "exact",
             zero);

    const auto plates = sweep_separation(pair, gold, SweepGeometry::Plates,
                                         Approach::PlasmaZeroFrequency, default_separation_grid(), k);
    const auto sphere = sweep_separation(pair, gold, SweepGeometry::Sphere,
                                         Approach::PlasmaZeroFrequency, default_separation_grid(), k);
    bool flat = true;
    bool monotone = true;
    for (std::size_t i = 1; i < plates.size(); ++i) {
      flat &= plates[i].ideal == plates[0].ideal;
      monotone &= std::abs(plates[i].real) < std::abs(plates[i - 1].real);
      monotone &= std::abs(sphere[i].real) < std::abs(sphere[i - 1].real);
    }
    list.add(10, "ideal-plates-independent-of-a", "ideal-metal dF_pp identical across the grid",
             flat ? 1.0 : 0.0, "exact", flat);
    list.add(10, "monotone-in-a", "|dF| strictly decreasing in a, Au, both geometries",
             monotone ? 1.0 : 0.0, "every adjacent pair", monotone);

    const MetalModel im = MetalModel::ideal();
    const double f1 =
        sphere_plate_force_pfa(um(1.0), T300, R1mm, im, Approach::PlasmaZeroFrequency, spec, k).value;
    const double f2 =
        sphere_plate_force_pfa(um(1.0), T300, R2mm, im, Approach::PlasmaZeroFrequency, spec, k).value;
    list.add(10, "pfa-linear-in-R", "F(2R) == 2 F(R)", f2 / f1, "2 exactly", f2 == 2.0 * f1);

    const Temperature T1K(1.0);
    list.relative(10, "ideal-plate-zero-T", "ideal Lifshitz pressure at 1 K, a = 1 um",
                  plate_pressure(um(1.0), T1K, im, Approach::PlasmaZeroFrequency, spec, k).value,
                  plate_pressure_zero_temperature(um(1.0), k), 1e-3);
    list.relative(10, "ideal-sphere-zero-T", "ideal PFA force at 1 K, a = 1 um, R = 1 mm",
                  sphere_plate_force_pfa(um(1.0), T1K, R1mm, im, Approach::PlasmaZeroFrequency, spec, k)
                      .value,
                  sphere_force_zero_temperature(um(1.0), R1mm, k), 1e-3);

    // Five-point derivative of the free energy against the pressure sum.
    double worst = 0.0;
    for (double a : {0.5, 1.0, 1.5}) {
      const double am = a * 1e-6;
      const double h = 1e-3 * am;
      auto E = [&](double x) {
        return plate_free_energy_per_area(Separation(x), T300, gold_model,
                                          Approach::PlasmaZeroFrequency, spec, k);
      };
      const double dE = (E(am - 2 * h) - 8 * E(am - h) + 8 * E(am + h) - E(am + 2 * h)) / (12 * h);
      const double P =
          plate_pressure(Separation(am), T300, gold_model, Approach::PlasmaZeroFrequency, spec, k)
              .value;
      worst = std::max(worst, rel_dev(-dE, P));
    }
    list.add(10, "thermodynamic-identity", "max |(-dE/da - P) / P| at a = 0.5, 1, 1.5 um", worst,
             "<= 1e-6", worst <= 1e-6);
  }

  return report;
}

}  // namespace casimir
