#pragma once

#include <vector>

#include "viscowave/models.hpp"
#include "viscowave/numerics.hpp"

namespace viscowave::numerics {

struct DualityReport {
  std::vector<double> t_grid;
  std::vector<double> convolution;  // int_0^t G(s) J(t - s) ds
  std::vector<double> residual;     // |convolution - t| / t
  double max_residual = 0.0;
};

/// Checks G * J = t with G = L^-1[1/(p C(p))] obtained by numerical inversion
/// at every quadrature node.
DualityReport verify_duality(const CreepModel& model, const std::vector<double>& t_grid,
                             const InversionConfig& config = InversionConfig::dehoog());

struct MonotonicityReport {
  bool passed = true;
  int worst_order = 0;       // order of the worst sign violation, 0 if none
  double worst_point = 0.0;  // first node of that divided difference
  double worst_excess = 0.0; // violation in units of the noise bound
  int checks = 0;
};

/// Sampled complete-monotonicity test: every divided difference of order n in
/// [min_order, max_order] over consecutive nodes of a log-spaced grid on
/// [lo, hi] must have sign (-1)^n, up to the rounding bound implied by a
/// relative accuracy `rel_noise` of the samples.
MonotonicityReport check_complete_monotonicity(const RealFunction& f, double lo, double hi, int points,
                                               int min_order, int max_order, double rel_noise);

}  // namespace viscowave::numerics
