#include "viscowave/response.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "detail.hpp"
#include "viscowave/error.hpp"
#include "viscowave/specfun.hpp"
#include "viscowave/spectrum.hpp"

namespace viscowave {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kQuarterPi = 0.78539816339744830961566084581987572;

FrequencyResponseRow finish(const MediumSpec& medium, double omega, double a, double d) {
  FrequencyResponseRow row;
  row.omega = omega;
  row.attenuation = a;
  row.dispersion = d;
  row.phase_speed = 1.0 / (medium.slowness() + d / omega);
  row.q_factor = a > 0.0 ? omega / (2.0 * row.phase_speed * a) : kInf;
  return row;
}

void check_omega(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) fail(ErrorKind::Domain, "angular frequency must be finite and > 0");
}

// Integral over (0, pi/4) split at the given interior points.
double quarter_integral(const numerics::RealFunction& f, std::vector<double> breaks,
                        const numerics::QuadratureOptions& opts) {
  breaks.push_back(kQuarterPi);
  std::sort(breaks.begin(), breaks.end());
  double lo = 0.0;
  double sum = 0.0;
  for (double b : breaks) {
    if (!(b > lo) || b > kQuarterPi) continue;
    sum += numerics::integrate(f, lo, b, numerics::SingularityHint::none(), opts).value;
    lo = b;
  }
  return sum;
}

// Rates at which the density changes character; used as quadrature breakpoints.
std::vector<double> characteristic_rates(const CreepModel& model) {
  std::vector<double> rates;
  switch (model.family()) {
    case Family::StrickMainardi:
      rates.push_back(model.as<StrickMainardi>().omega);
      break;
    case Family::JeffreysLomnitzStrick: {
      const double w = model.as<JeffreysLomnitzStrick>().omega;
      rates.insert(rates.end(), {w, 10.0 * w, 740.0 * w});
      break;
    }
    case Family::Andrade: {
      const auto& m = model.as<Andrade>();
      if (m.j0 > 0.0 && m.j1 > 0.0) rates.push_back(m.j1 / m.j0);
      if (m.j0 > 0.0 && m.j2 > 0.0) rates.push_back(std::pow(std::tgamma(1.0 + m.alpha) * m.j2 / m.j0, 1.0 / m.alpha));
      break;
    }
  }
  return rates;
}

// r = omega tan(theta) below omega and r = omega cot(phi) above, so that both
// ends of the half-line are mapped to finite angles measured from their own
// endpoint.
FrequencyResponseRow spectral_generic(const MediumSpec& medium, double omega) {
  const auto opts = detail::default_quadrature();
  std::vector<double> low_breaks, high_breaks;
  for (double r : characteristic_rates(medium.model())) {
    if (!(r > 0.0) || !std::isfinite(r)) continue;
    if (r < omega) low_breaks.push_back(std::atan(r / omega));
    if (r > omega) high_breaks.push_back(std::atan(omega / r));
  }
  auto h = [&](double r) { return attenuation_density(medium, r); };
  const double a_low = quarter_integral([&](double th) { return h(omega * std::tan(th)); }, low_breaks, opts);
  const double a_high = quarter_integral([&](double ph) { return h(omega / std::tan(ph)); }, high_breaks, opts);
  const double d_low = quarter_integral(
      [&](double th) {
        const double t = std::tan(th);
        return t * h(omega * t);
      },
      low_breaks, opts);
  const double d_high = quarter_integral(
      [&](double ph) {
        const double c = 1.0 / std::tan(ph);
        return c * h(omega * c);
      },
      high_breaks, opts);
  return finish(medium, omega, omega * (a_low + a_high), omega * (d_low + d_high));
}

// Strick-Mainardi in u = Omega/r - 1 on (0, Omega), plus the outer interval
// beyond Omega where C(-r) < 0.
FrequencyResponseRow spectral_strick(const MediumSpec& medium, double omega) {
  const auto& m = medium.model().as<StrickMainardi>();
  if (m.m0 == 0.0) return finish(medium, omega, 0.0, 0.0);
  const auto opts = detail::default_quadrature();
  const double rho = medium.rho();
  const double w2 = omega * omega;
  const double o2 = m.omega * m.omega;
  const std::vector<double> breaks = {1.0, m.omega / omega - 1.0};
  const double a_inner = detail::integrate_half_line(
      [&](double u) {
        const double s = 1.0 + u;
        return detail::sm_density_u(m, rho, u) / (w2 * s * s + o2);
      },
      breaks, opts);
  const double d_inner = detail::integrate_half_line(
      [&](double u) {
        const double s = 1.0 + u;
        return detail::sm_density_u(m, rho, u) / (s * (w2 * s * s + o2));
      },
      breaks, opts);
  const double a_outer = detail::sm_outer_integral(
      m, rho, [&](double r) { return w2 / (w2 + r * r); }, opts);
  const double d_outer = detail::sm_outer_integral(
      m, rho, [&](double r) { return omega * r / (w2 + r * r); }, opts);
  return finish(medium, omega, w2 * m.omega * a_inner + a_outer, omega * o2 * d_inner + d_outer);
}

}  // namespace

FrequencyResponseRow response_direct(const MediumSpec& medium, double omega) {
  check_omega(omega);
  const cdouble p(0.0, -omega);
  const cdouble pg = p * g_tilde(medium, p);
  return finish(medium, omega, pg.real(), -pg.imag());
}

FrequencyResponseRow response_spectral(const MediumSpec& medium, double omega) {
  check_omega(omega);
  if (medium.model().family() == Family::StrickMainardi) return spectral_strick(medium, omega);
  return spectral_generic(medium, omega);
}

double andrade_attenuation_explicit(const MediumSpec& medium, double omega) {
  check_omega(omega);
  if (medium.model().family() != Family::Andrade)
    fail(ErrorKind::Unsupported, "explicit attenuation formula applies to the Andrade family only");
  const auto& m = medium.model().as<Andrade>();
  const double c0 = medium.c0();
  const double b = std::tgamma(1.0 + m.alpha) * m.j2 / m.j0 * std::pow(omega, -m.alpha);
  const double half = 0.5 * specfun::kPi * m.alpha;
  const double x = 1.0 + b * std::cos(half);
  const double y = m.j1 / (m.j0 * omega) + b * std::sin(half);
  const double modulus = std::hypot(x, y);
  const double gap = y * (y / (modulus + x));  // |W| - X with X > 0
  return omega / (c0 * std::sqrt(2.0)) * std::sqrt(gap);
}

double db_per_meter(double attenuation) {
  if (!(attenuation >= 0.0)) fail(ErrorKind::Domain, "attenuation must be >= 0");
  return 20.0 / std::log(10.0) * attenuation;
}

double paper_db(double attenuation) {
  if (!(attenuation >= 0.0)) fail(ErrorKind::Domain, "attenuation must be >= 0");
  return -attenuation / std::log(10.0);
}

std::vector<double> make_grid(double lo, double hi, int points, Spacing spacing) {
  if (!std::isfinite(lo) || !(hi > lo) || !std::isfinite(hi)) fail(ErrorKind::Precondition, "grid needs min < max");
  if (spacing == Spacing::Log && !(lo > 0.0)) fail(ErrorKind::Precondition, "log grid needs 0 < min");
  if (points < 2) fail(ErrorKind::Precondition, "grid needs at least 2 points");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    const double s = static_cast<double>(i) / (points - 1);
    grid[i] = spacing == Spacing::Log ? lo * std::pow(hi / lo, s) : lo + (hi - lo) * s;
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<FrequencyResponseRow> sweep(const MediumSpec& medium, double omega_min, double omega_max, int points,
                                        Spacing spacing, ResponsePath path, int threads) {
  if (!(omega_min > 0.0)) fail(ErrorKind::Precondition, "sweep needs omega_min > 0");
  const std::vector<double> grid = make_grid(omega_min, omega_max, points, spacing);
  std::vector<FrequencyResponseRow> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < grid.size(); i += stride) {
      try {
        rows[i] = path == ResponsePath::Direct ? response_direct(medium, grid[i]) : response_spectral(medium, grid[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t n = static_cast<std::size_t>(std::clamp(threads, 1, 64));
  if (n == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < n; ++k) pool.emplace_back(work, k, n);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!errors[i]) continue;
    std::ostringstream os;
    os.precision(17);
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      os << e.detail() << " (at omega = " << grid[i] << ")";
      throw Error(e.kind(), os.str());
    }
  }
  return rows;
}

}  // namespace viscowave
