#include "viscowave/duality.hpp"

#include <algorithm>
#include <cmath>

#include "viscowave/error.hpp"

namespace viscowave::numerics {

DualityReport verify_duality(const CreepModel& model, const std::vector<double>& t_grid,
                             const InversionConfig& config) {
  if (t_grid.empty()) fail(ErrorKind::Precondition, "duality check needs a non-empty t grid");
  if (!(t_grid.front() > 0.0) || !std::is_sorted(t_grid.begin(), t_grid.end()))
    fail(ErrorKind::Precondition, "duality t grid must be positive and sorted ascending");
  config.validate();

  // The Laplace transform of J is C(p)/p, so that of G is 1/(p C(p)).
  auto relaxation = [&](double s) {
    return inverse_laplace([&](cdouble p) { return 1.0 / (p * carson_transform(model, p)); }, s, config);
  };

  QuadratureOptions opts;
  opts.rel_tol = 1e-9;
  opts.abs_tol = 0.0;

  DualityReport report;
  report.t_grid = t_grid;
  for (double t : t_grid) {
    opts.abs_tol = 1e-12 * t;
    auto f = [&](double s) { return relaxation(s) * creep_value(model, t - s); };
    const double value = tanh_sinh(f, 0.0, t, opts).value;
    const double residual = std::abs(value - t) / t;
    report.convolution.push_back(value);
    report.residual.push_back(residual);
    report.max_residual = std::max(report.max_residual, residual);
  }
  return report;
}

MonotonicityReport check_complete_monotonicity(const RealFunction& f, double lo, double hi, int points,
                                               int min_order, int max_order, double rel_noise) {
  if (!(lo > 0.0) || !(hi > lo)) fail(ErrorKind::Precondition, "monotonicity grid needs 0 < lo < hi");
  if (min_order < 0 || max_order < min_order) fail(ErrorKind::Precondition, "invalid divided-difference orders");
  if (points < max_order + 1) fail(ErrorKind::Precondition, "too few points for the requested order");

  std::vector<double> x(points), y(points);
  for (int i = 0; i < points; ++i) {
    x[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (points - 1));
    y[i] = f(x[i]);
    if (!std::isfinite(y[i])) fail(ErrorKind::Domain, "non-finite sample in monotonicity check");
  }

  MonotonicityReport report;
  for (int n = min_order; n <= max_order; ++n) {
    for (int i = 0; i + n < points; ++i) {
      // f[x_i..x_{i+n}] = sum_k y_k / prod_{j != k} (x_k - x_j)
      double dd = 0.0;
      double noise = 0.0;
      for (int k = i; k <= i + n; ++k) {
        double w = 1.0;
        for (int j = i; j <= i + n; ++j)
          if (j != k) w /= x[k] - x[j];
        dd += w * y[k];
        noise += std::abs(w * y[k]);
      }
      noise *= rel_noise;
      const double signed_dd = (n % 2 == 0) ? dd : -dd;
      ++report.checks;
      if (signed_dd < -noise) {
        const double excess = -signed_dd / std::max(noise, 1e-300);
        if (report.passed || excess > report.worst_excess) {
          report.worst_order = n;
          report.worst_point = x[i];
          report.worst_excess = excess;
        }
        report.passed = false;
      }
    }
  }
  return report;
}

}  // namespace viscowave::numerics
