#include "casimir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

namespace casimir {
namespace {

constexpr int kMaxChunks = 48;
constexpr std::size_t kMaxIntervals = 1000;

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const noexcept { gsl_integration_workspace_free(w); }
};
using Workspace = std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter>;

gsl_integration_workspace* thread_workspace() {
  thread_local Workspace w(gsl_integration_workspace_alloc(kMaxIntervals));
  return w.get();
}

double trampoline(double x, void* params) {
  return (*static_cast<const std::function<double(double)>*>(params))(x);
}

// GSL reports failures through its return codes; the default handler aborts.
const bool kHandlerDisabled = [] {
  gsl_set_error_handler_off();
  return true;
}();

}  // namespace

double lifshitz_tail_bound(int power, double Y) noexcept {
  const double e = std::exp(-Y);
  const double poly = power == 1 ? (Y + 1.0) : (Y * Y + 2.0 * Y + 2.0);
  return poly * e / -std::expm1(-Y);
}

QuadratureResult integrate_exponential_tail(const std::function<double(double)>& f,
                                            double lower,
                                            const std::function<double(double)>& tail_bound,
                                            const QuadratureSpec& spec) {
  (void)kHandlerDisabled;
  gsl_function gf{&trampoline, const_cast<std::function<double(double)>*>(&f)};
  gsl_integration_workspace* ws = thread_workspace();

  QuadratureResult out;
  double lo = lower;
  double width = 1.0;
  for (int chunk = 0; chunk < kMaxChunks; ++chunk) {
    const double hi = lo + width;
    double value = 0.0;
    double err = 0.0;
    const int status = gsl_integration_qag(&gf, lo, hi, spec.absolute_floor, spec.relative_tolerance,
                                           kMaxIntervals, GSL_INTEG_GAUSS15, ws, &value, &err);
    if (status != GSL_SUCCESS) {
      char buf[224];
      std::snprintf(buf, sizeof buf,
                    "quadrature failed on [%.6g, %.6g]: %s (value %.6g, error %.3g, rel tol %.3g)",
                    lo, hi, gsl_strerror(status), value, err, spec.relative_tolerance);
      throw NumericalError(buf);
    }
    out.value += value;
    out.error_estimate += err;
    out.chunks = chunk + 1;
    out.upper_limit = hi;
    out.tail_bound = tail_bound(hi);

    if (out.tail_bound <=
        std::max(spec.relative_tolerance * std::abs(out.value), spec.absolute_floor)) {
      return out;
    }
    lo = hi;
    width *= 2.0;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "integrand tail not bounded after %d chunks from %.6g (bound %.3g, value %.3g)",
                kMaxChunks, lower, out.tail_bound, out.value);
  throw NumericalError(buf);
}

}  // namespace casimir
