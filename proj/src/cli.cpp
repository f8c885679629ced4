#include "casimir/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "casimir/perturbative.hpp"
#include "casimir/scenarios.hpp"
#include "casimir/validation.hpp"

namespace casimir::cli {
namespace {

using nlohmann::ordered_json;

/// Invalid combinations of otherwise well-formed flags.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Round-trip through the 9-digit text form so JSON and CSV carry identical values.
double rounded(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

ordered_json config_json(const RunConfig& c) {
  ordered_json j;
  j["command"] = c.command;
  j["geometry"] = c.geometry;
  j["approach"] = c.approach;
  j["lambda_p_nm"] = rounded(c.lambda_p_nm);
  j["t1_k"] = rounded(c.t1_k);
  j["t2_k"] = rounded(c.t2_k);
  j["a_um"] = rounded(c.a_um);
  j["a_min_um"] = rounded(c.a_min_um);
  j["a_max_um"] = rounded(c.a_max_um);
  j["points"] = c.points ? ordered_json(*c.points) : ordered_json(nullptr);
  j["radius_mm"] = rounded(c.radius_mm);
  j["format"] = c.format;
  j["oracle"] = c.oracle;
  j["tail_tolerance"] = rounded(c.tail_tolerance);
  j["quadrature_tolerance"] = rounded(c.quadrature_tolerance);
  return j;
}

std::string config_line(const RunConfig& c) {
  std::string line;
  const ordered_json doc = config_json(c);
  for (const auto& [key, value] : doc.items()) {
    if (!line.empty()) line += ' ';
    line += key + '=';
    line += value.is_string() ? value.get<std::string>()
            : value.is_number_float() ? format_number(value.get<double>())
                                      : value.dump();
  }
  return line;
}

void write_table(const RunConfig& c, const Table& t, std::ostream& out) {
  if (c.format == "json") {
    ordered_json doc;
    doc["version"] = CASIMIR_DELTA_VERSION;
    doc["config"] = config_json(c);
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
      ordered_json r;
      for (std::size_t i = 0; i < t.columns.size(); ++i) r[t.columns[i]] = rounded(row[i]);
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
    return;
  }
  out << "# casimir-delta " << CASIMIR_DELTA_VERSION << '\n';
  out << "# " << config_line(c) << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

PlasmaWavelength material(const RunConfig& c) {
  if (c.approach == "ideal") return PlasmaWavelength::ideal();
  if (!(c.lambda_p_nm > 0.0)) throw UsageError("--lambda-p-nm must be positive (use --approach ideal)");
  return PlasmaWavelength::from_nanometers(c.lambda_p_nm);
}

Approach zero_frequency(const RunConfig& c) {
  return c.approach == "modified-te" ? Approach::ModifiedTE : Approach::PlasmaZeroFrequency;
}

TemperaturePair temperatures(const RunConfig& c) {
  return {Temperature(c.t1_k), Temperature(c.t2_k)};
}

SweepSpec separation_grid(const RunConfig& c) {
  SweepSpec g = default_separation_grid();
  g.min = c.a_min_um * 1e-6;
  g.max = c.a_max_um * 1e-6;
  if (c.points) g.points = *c.points;
  return g;
}

Table fig1(const RunConfig& c) {
  if (c.approach == "modified-te") {
    throw UsageError("fig1 (plates) supports --approach plasma or ideal");
  }
  Table t{{"a_um", "dF_real_N_per_m2", "dF_ideal_N_per_m2"}, {}};
  for (const auto& row : sweep_separation(temperatures(c), material(c), SweepGeometry::Plates,
                                          Approach::PlasmaZeroFrequency, separation_grid(c))) {
    t.rows.push_back({row.a * 1e6, row.real, row.ideal});
  }
  return t;
}

Table fig2(const RunConfig& c) {
  Table t{{"a_um", "dFps_over_R_real_N_per_m", "dFps_over_R_ideal_N_per_m"}, {}};
  for (const auto& row : sweep_separation(temperatures(c), material(c), SweepGeometry::Sphere,
                                          zero_frequency(c), separation_grid(c))) {
    t.rows.push_back({row.a * 1e6, row.real, row.ideal});
  }
  return t;
}

Table fig3(const RunConfig& c) {
  SweepSpec grid = default_temperature_grid();
  grid.min = c.t1_k;
  grid.max = c.t2_k;
  if (c.points) grid.points = *c.points;
  // The approach flag does not apply: both prescriptions are always emitted.
  const PlasmaWavelength lp =
      c.approach == "ideal" ? PlasmaWavelength::ideal() : PlasmaWavelength::from_nanometers(c.lambda_p_nm);
  Table t{{"T2_K", "dFps_over_R_plasma", "dFps_over_R_modifiedTE", "dFps_over_R_ideal"}, {}};
  for (const auto& row :
       sweep_temperature(Separation::from_micrometers(c.a_um), Temperature(c.t1_k), grid, lp)) {
    t.rows.push_back({row.T2, row.plasma, row.modified_te, row.ideal});
  }
  return t;
}

ordered_json terms_json(const PerturbativeTerms& t) {
  return {{"base", rounded(t.base)},
          {"thermal_ideal", rounded(t.thermal_ideal)},
          {"conductivity_first_order", rounded(t.conductivity_first_order)},
          {"cross_term", rounded(t.cross_term)},
          {"omitted_from_order", t.omitted_from_order}};
}

ordered_json validity_json(const ValidityReport& v) {
  ordered_json j{{"in_range", v.in_range()},
                 {"separation_below_plasma_wavelength", v.separation_below_plasma_wavelength},
                 {"separation_above_max", v.separation_above_max},
                 {"temperature_above_max", v.temperature_above_max}};
  if (v.proximity_error_scale > 0.0) j["a_over_R"] = rounded(v.proximity_error_scale);
  j["warnings"] = v.warnings();
  return j;
}

void compute(const RunConfig& c, std::ostream& out) {
  const bool plates = c.geometry == "plates";
  if (plates && c.approach == "modified-te") {
    throw UsageError("compute --geometry plates supports --approach plasma or ideal");
  }
  const Separation a = Separation::from_micrometers(c.a_um);
  const TemperaturePair pair = temperatures(c);
  const Radius R = Radius::from_millimeters(c.radius_mm);
  const PlasmaWavelength lp = material(c);
  const Approach approach = zero_frequency(c);

  auto perturbative = [&](Temperature T) {
    ForceResult f = plates ? plate_force_perturbative(a, T, lp) : sphere_force_perturbative(a, T, R, lp);
    if (!plates && approach == Approach::ModifiedTE) {
      f.value -= te_zero_frequency_asymptotic(a, T, R, lp);
      f.approach = approach;
    }
    return f;
  };
  const ForceResult f1 = perturbative(pair.T1);
  const ForceResult f2 = perturbative(pair.T2);
  const DifferenceResult diff =
      plates ? delta_force_plates(a, pair, lp) : delta_force_sphere(a, pair, R, lp, approach);

  ordered_json j;
  j["version"] = CASIMIR_DELTA_VERSION;
  j["config"] = config_json(c);
  j["geometry"] = plates ? "plates" : "sphere";
  j["approach"] = std::string(to_string(approach));
  j["material"] = lp.is_ideal() ? ordered_json{{"model", "ideal"}}
                                : ordered_json{{"model", "plasma"}, {"lambda_p_nm", rounded(c.lambda_p_nm)}};
  j["units"] = plates ? "N_per_m2" : "N";
  j["method"] = std::string(to_string(Method::Perturbative));
  j["force_T1"] = rounded(f1.value);
  j["force_T2"] = rounded(f2.value);
  j["delta_F"] = rounded(diff.delta_F);
  j["terms_T1"] = terms_json(*f1.terms);
  j["terms_T2"] = terms_json(*f2.terms);
  j["difference"] = {{"factor1", rounded(diff.factor1)},
                     {"factor2", rounded(diff.factor2)},
                     {"zero_frequency_te_term", rounded(diff.zero_frequency_te_term)}};
  j["validity"] = validity_json(diff.validity);

  if (c.oracle) {
    const EngineSpec spec = c.engine_spec();
    const MetalModel model = MetalModel::from(lp);
    auto oracle = [&](Temperature T) {
      return plates ? plate_pressure(a, T, model, approach, spec).value
                    : sphere_plate_force_pfa(a, T, R, model, approach, spec).value;
    };
    const double o1 = oracle(pair.T1);
    const double o2 = oracle(pair.T2);
    const double od = o2 - o1;
    auto dev = [](double p, double o) { return o == 0.0 ? 0.0 : std::abs(p - o) / std::abs(o); };
    j["oracle"] = {{"method", std::string(to_string(Method::LifshitzOracle))},
                   {"force_T1", rounded(o1)},
                   {"force_T2", rounded(o2)},
                   {"delta_F", rounded(od)},
                   {"relative_deviation_T1", rounded(dev(f1.value, o1))},
                   {"relative_deviation_T2", rounded(dev(f2.value, o2))},
                   {"relative_deviation_delta_F", rounded(od == 0.0 && diff.delta_F == 0.0
                                                              ? 0.0
                                                              : dev(diff.delta_F, od))}};
  }

  if (c.format == "json") {
    out << j.dump(2) << '\n';
    return;
  }
  // Flat field,value listing of the scalar entries.
  out << "# casimir-delta " << CASIMIR_DELTA_VERSION << '\n';
  out << "# " << config_line(c) << '\n';
  out << "field,value\n";
  std::function<void(const std::string&, const ordered_json&)> flatten =
      [&](const std::string& prefix, const ordered_json& node) {
        for (const auto& [key, value] : node.items()) {
          const std::string name = prefix.empty() ? key : prefix + "." + key;
          if (key == "config" || key == "warnings") continue;
          if (value.is_object()) {
            flatten(name, value);
          } else {
            out << name << ','
                << (value.is_number_float() ? format_number(value.get<double>())
                    : value.is_string()     ? value.get<std::string>()
                                            : value.dump())
                << '\n';
          }
        }
      };
  flatten("", j);
}

int validate(const RunConfig& c, std::ostream& out) {
  const Constants k = c.skew_constants == 0.0 ? kCodata2018 : kCodata2018.skewed(c.skew_constants);
  const ValidationReport report = run_validation(k, c.engine_spec());

  if (c.format == "json") {
    ordered_json j;
    j["version"] = CASIMIR_DELTA_VERSION;
    j["passed"] = report.all_passed();
    j["failures"] = report.failures();
    ordered_json checks = ordered_json::array();
    for (const auto& ch : report.checks) {
      checks.push_back({{"id", ch.id},
                        {"criterion", ch.criterion},
                        {"description", ch.description},
                        {"measured", rounded(ch.measured)},
                        {"expected", ch.expected},
                        {"passed", ch.passed},
                        {"note", ch.note}});
    }
    j["checks"] = std::move(checks);
    out << j.dump(2) << '\n';
  } else {
    for (const auto& ch : report.checks) {
      out << (ch.passed ? "PASS " : "FAIL ") << '[' << ch.criterion << "] " << ch.id << ": "
          << ch.description << " = " << format_number(ch.measured) << " (expected " << ch.expected
          << ")";
      if (!ch.note.empty()) out << "; " << ch.note;
      out << '\n';
    }
    out << report.checks.size() - report.failures() << '/' << report.checks.size()
        << " checks passed\n";
  }
  return report.all_passed() ? kSuccess : kValidationFailure;
}

void check_choices(const RunConfig& c) {
  if (c.geometry != "plates" && c.geometry != "sphere") throw UsageError("--geometry must be plates or sphere");
  if (c.approach != "plasma" && c.approach != "modified-te" && c.approach != "ideal") {
    throw UsageError("--approach must be plasma, modified-te or ideal");
  }
  if (c.format != "csv" && c.format != "json") throw UsageError("--format must be csv or json");
  if (c.points && *c.points < 1) throw UsageError("--points must be at least 1");
  if (!(c.tail_tolerance > 0.0) || !(c.quadrature_tolerance > 0.0)) {
    throw UsageError("tolerances must be positive");
  }
}

}  // namespace

EngineSpec RunConfig::engine_spec() const {
  EngineSpec spec;
  spec.matsubara.relative_tail_tolerance = tail_tolerance;
  spec.quadrature.relative_tolerance = quadrature_tolerance;
  return spec;
}

bool apply_precision_override(RunConfig& config, const char* value) {
  if (value == nullptr || *value == '\0') return true;
  char* end = nullptr;
  const double tail = std::strtod(value, &end);
  if (end == value || !(tail > 0.0)) return false;
  double quad = tail;
  if (*end == ',') {
    const char* second = end + 1;
    quad = std::strtod(second, &end);
    if (end == second || !(quad > 0.0)) return false;
  }
  if (*end != '\0') return false;
  config.tail_tolerance = tail;
  config.quadrature_tolerance = quad;
  return true;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ofstream file;
  std::ostream* sink = &out;
  try {
    check_choices(config);
    // Build the whole output before touching the file so failures leave no partial data.
    std::ostringstream buffer;
    int code = kSuccess;
    if (config.command == "fig1") {
      write_table(config, fig1(config), buffer);
    } else if (config.command == "fig2") {
      write_table(config, fig2(config), buffer);
    } else if (config.command == "fig3") {
      write_table(config, fig3(config), buffer);
    } else if (config.command == "compute") {
      compute(config, buffer);
    } else if (config.command == "validate") {
      code = validate(config, buffer);
    } else {
      throw UsageError("unknown command '" + config.command + "'");
    }
    if (!config.output.empty()) {
      file.open(config.output);
      if (!file) throw UsageError("cannot open output file " + config.output);
      sink = &file;
    }
    *sink << buffer.str();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Thermal Casimir difference forces between real and ideal metals", "casimir-delta"};
  app.set_version_flag("--version", std::string(CASIMIR_DELTA_VERSION));
  app.set_config("--config", "", "key = value file; command-line flags take precedence");
  app.require_subcommand(1, 1);

  std::optional<double> tail_tol;
  std::optional<double> quad_tol;
  app.add_option("--geometry", config.geometry, "plates | sphere")->capture_default_str();
  app.add_option("--approach", config.approach, "plasma | modified-te | ideal")->capture_default_str();
  app.add_option("--lambda-p-nm", config.lambda_p_nm, "plasma wavelength [nm]")->capture_default_str();
  app.add_option("--t1-k", config.t1_k, "lower temperature [K]")->capture_default_str();
  app.add_option("--t2-k", config.t2_k, "upper temperature [K]")->capture_default_str();
  app.add_option("--a-um", config.a_um, "separation [um]")->capture_default_str();
  app.add_option("--a-min-um", config.a_min_um, "sweep start [um]")->capture_default_str();
  app.add_option("--a-max-um", config.a_max_um, "sweep end [um]")->capture_default_str();
  app.add_option("--points", config.points, "grid points (fig1/fig2: 75, fig3: 51)");
  app.add_option("--radius-mm", config.radius_mm, "sphere radius [mm]")->capture_default_str();
  app.add_option("--format", config.format, "csv | json")->capture_default_str();
  app.add_flag("--oracle", config.oracle, "compute: add Lifshitz-sum values and deviations");
  app.add_option("--output", config.output, "write data to this file instead of stdout");
  app.add_option("--tail-tolerance", tail_tol, "relative Matsubara tail tolerance");
  app.add_option("--quadrature-tolerance", quad_tol, "relative quadrature tolerance");
  app.add_option("--skew-constants", config.skew_constants)->group("");

  for (const char* name : {"fig1", "fig2", "fig3", "compute", "validate"}) {
    app.add_subcommand(name)->fallthrough();
  }
  app.get_subcommand("fig1")->description("plate difference force vs separation");
  app.get_subcommand("fig2")->description("sphere-plate difference force per radius vs separation");
  app.get_subcommand("fig3")->description("sphere-plate difference force per radius vs upper temperature");
  app.get_subcommand("compute")->description("single-point forces, decomposition and optional oracle");
  app.get_subcommand("validate")->description("run the acceptance checklist");

  std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << CASIMIR_DELTA_VERSION << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  config.command = app.get_subcommands().front()->get_name();
  if (!apply_precision_override(config, std::getenv("CASIMIR_DELTA_PRECISION"))) {
    err << "error: CASIMIR_DELTA_PRECISION must be 'tol' or 'tail_tol,quad_tol'\n";
    return kUsageError;
  }
  if (tail_tol) config.tail_tolerance = *tail_tol;
  if (quad_tol) config.quadrature_tolerance = *quad_tol;
  return execute(config, out, err);
}

}  // namespace casimir::cli
