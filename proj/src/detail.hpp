#pragma once

// Internal helpers shared by the spectrum, response and wavefront modules.

#include <vector>

#include "viscowave/models.hpp"
#include "viscowave/numerics.hpp"

namespace viscowave::detail {

/// Im of the principal square root of X + iY, Y >= 0, without cancellation.
double im_sqrt(double x, double y);

/// Strick-Mainardi density as a function of u = Omega/r - 1 > 0.
double sm_density_u(const StrickMainardi& m, double rho, double u);

/// Outside (0, Omega) the Strick-Mainardi Carson transform C(-r) is real; it
/// is negative on (Omega, r*) whenever alpha <= 0 or J1 < 0, and there
/// h = (rho (-C))^(1/2) / pi. In terms of w = Omega/r the interval is
/// (w*, 1); sm_outer_w returns w* or 1 when the interval is empty. w* can be
/// tiny when M0 >> J0, so the density takes log v, v = 1 - w.
double sm_outer_w(const StrickMainardi& m);
double sm_density_logv(const StrickMainardi& m, double rho, double log_v);

/// int over (Omega, r*) of weight(r) h(r) dr.
double sm_outer_integral(const StrickMainardi& m, double rho, const numerics::RealFunction& weight,
                         const numerics::QuadratureOptions& opts);

/// int_0^inf f(u) du split at the given interior breakpoints; the last
/// piece uses exp-sinh.
double integrate_half_line(const numerics::RealFunction& f, std::vector<double> breaks,
                           const numerics::QuadratureOptions& opts = {});

/// Quadrature options honouring the VISCOWAVE_TOL override when set.
numerics::QuadratureOptions default_quadrature();

}  // namespace viscowave::detail
