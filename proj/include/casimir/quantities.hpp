#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/constants.hpp"

namespace casimir {

/// Thrown for inputs outside the mathematical domain of an operation
/// (non-positive separations, NaN temperatures, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Upper edges of the low-temperature, thin-skin regime.
inline constexpr double kMaxValidSeparation = 2.0e-6;  // m
inline constexpr double kMaxValidTemperature = 350.0;  // K

/// Distance between the closest points of the two bodies, in meters.
class Separation {
 public:
  explicit Separation(double meters);
  [[nodiscard]] double meters() const noexcept { return meters_; }
  [[nodiscard]] double micrometers() const noexcept { return meters_ * 1e6; }
  static Separation from_micrometers(double um) { return Separation(um * 1e-6); }

 private:
  double meters_;
};

/// Absolute temperature in kelvin.
class Temperature {
 public:
  explicit Temperature(double kelvin);
  [[nodiscard]] double kelvin() const noexcept { return kelvin_; }

 private:
  double kelvin_;
};

/// Plasma wavelength of the metal. Zero encodes the ideal (perfectly
/// conducting) metal.
class PlasmaWavelength {
 public:
  explicit PlasmaWavelength(double meters);
  [[nodiscard]] double meters() const noexcept { return meters_; }
  [[nodiscard]] bool is_ideal() const noexcept { return meters_ == 0.0; }
  static PlasmaWavelength from_nanometers(double nm) { return PlasmaWavelength(nm * 1e-9); }
  static PlasmaWavelength ideal() { return PlasmaWavelength(0.0); }

 private:
  double meters_;
};

/// Sphere (lens) radius in meters.
class Radius {
 public:
  explicit Radius(double meters);
  [[nodiscard]] double meters() const noexcept { return meters_; }
  static Radius from_millimeters(double mm) { return Radius(mm * 1e-3); }

 private:
  double meters_;
};

/// Gold, as used for every default in the tool.
inline constexpr double kGoldPlasmaWavelength = 136e-9;

struct DerivedScales {
  double T_eff;         // K
  double delta;         // m
  double delta_over_a;
  double T_over_Teff;
};

/// T_eff = hbar c / (2 a k_B): the temperature whose thermal photons match the
/// gap's characteristic frequency c / (2a).
[[nodiscard]] double effective_temperature(Separation a, const Constants& k = kCodata2018);

/// delta = lambda_p / (2 pi). Negative wavelengths throw DomainError.
[[nodiscard]] double skin_depth_parameter(double lambda_p, const Constants& k = kCodata2018);

[[nodiscard]] DerivedScales derived_scales(Separation a, Temperature T, PlasmaWavelength lambda_p,
                                           const Constants& k = kCodata2018);

struct ValidityReport {
  bool separation_below_plasma_wavelength = false;
  bool separation_above_max = false;
  bool temperature_above_max = false;
  // a / R for sphere-plate results; the proximity-force error is of this order.
  double proximity_error_scale = 0.0;

  [[nodiscard]] bool in_range() const noexcept {
    return !separation_below_plasma_wavelength && !separation_above_max &&
           !temperature_above_max;
  }
  [[nodiscard]] std::vector<std::string> warnings() const;
};

/// Flags parameters outside the regime where the perturbative formulas hold.
/// Never throws; results carry the report instead.
[[nodiscard]] ValidityReport classify_validity(Separation a, Temperature T1, Temperature T2,
                                               PlasmaWavelength lambda_p);
[[nodiscard]] ValidityReport classify_validity(Separation a, Temperature T,
                                               PlasmaWavelength lambda_p);

}  // namespace casimir
