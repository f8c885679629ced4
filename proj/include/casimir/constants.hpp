#pragma once

#include <numbers>

namespace casimir {

/// Fundamental constants in SI units (CODATA 2018 exact / recommended values).
struct Constants {
  double hbar;   // J s
  double c;      // m / s
  double k_B;    // J / K
  double zeta3;  // Riemann zeta(3)
  double pi;

  /// Copy with each constant skewed by `fraction` in the direction that raises
  /// k_B T / (hbar c). Used only to check that the validation report is sensitive
  /// to the constants it was given.
  [[nodiscard]] constexpr Constants skewed(double fraction) const {
    return Constants{hbar * (1.0 - fraction), c * (1.0 - fraction),
                     k_B * (1.0 + fraction), zeta3, pi};
  }
};

inline constexpr Constants kCodata2018{
    1.054571817e-34,
    299792458.0,
    1.380649e-23,
    1.2020569031595942854,
    std::numbers::pi,
};

}  // namespace casimir
