#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace casimir {

/// Raised when a sum or integral cannot reach its requested accuracy.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuadratureSpec {
  double relative_tolerance = 1e-9;
  double absolute_floor = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // summed QUADPACK error estimates
  double tail_bound = 0.0;      // analytic bound on the neglected [upper, inf) piece
  double upper_limit = 0.0;
  int chunks = 0;
};

/// Integrates `f` over [lower, inf) for integrands with an exponential tail.
///
/// The half line is covered by chunks of growing width, each integrated with
/// globally adaptive 15-point Gauss-Kronrod (GSL's QAG). After each chunk `tail_bound(Y)` must
/// return an upper bound on |integral of f over [Y, inf)|; integration stops
/// once that bound is below the requested accuracy.
[[nodiscard]] QuadratureResult integrate_exponential_tail(
    const std::function<double(double)>& f, double lower,
    const std::function<double(double)>& tail_bound, const QuadratureSpec& spec);

/// Bound on integral_Y^inf y^p e^{-y} / (1 - e^{-Y}) dy for p = 1, 2.
/// Every Lifshitz integrand satisfies |f(y)| <= y^p e^{-y} / (1 - e^{-y}).
[[nodiscard]] double lifshitz_tail_bound(int power, double Y) noexcept;

}  // namespace casimir
