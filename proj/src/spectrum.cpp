#include "viscowave/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "detail.hpp"
#include "viscowave/error.hpp"
#include "viscowave/specfun.hpp"

namespace viscowave {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = specfun::kPi;

// Beyond r = 740 Omega the JLS density carries a factor below e^{-740} and
// underflows; the cut-edge evaluation is skipped there.
constexpr double kJlsCutoff = 740.0;

constexpr double kLn2 = 0.69314718055994530942;

}  // namespace

namespace detail {

double im_sqrt(double x, double y) {
  const double modulus = std::hypot(x, y);
  if (x > 0.0) {
    // |Z| - X = Y^2 / (|Z| + X), formed as Y * (Y / (|Z| + X)) to avoid overflow
    return std::sqrt(0.5 * y * (y / (modulus + x)));
  }
  return std::sqrt(0.5 * (modulus - x));
}

double sm_density_u(const StrickMainardi& m, double rho, double u) {
  double x, y;
  if (m.alpha == 0.0) {
    x = m.j0 + m.m0 * std::log(u);
    y = kPi * m.m0;
  } else {
    // X = J0 + M0 [ (u^a - 1)/a - 2 u^a sin^2(a pi/2)/a ], continuous as a -> 0
    const double a = m.alpha;
    const double ua = std::pow(u, a);
    const double s = std::sin(0.5 * a * kPi);
    x = m.j0 + m.m0 * (std::expm1(a * std::log(u)) / a - 2.0 * ua * s * s / a);
    y = m.m0 * (std::sin(a * kPi) / a) * ua;
  }
  return std::sqrt(rho) / kPi * im_sqrt(x, y);
}

double sm_outer_w(const StrickMainardi& m) {
  if (m.m0 == 0.0) return 1.0;
  if (m.alpha == 0.0) return -std::expm1(-m.j0 / m.m0);
  const double q = m.alpha * m.j0 / m.m0;
  if (!(q < 1.0)) return 1.0;
  return -std::expm1(std::log1p(-q) / m.alpha);
}

double sm_density_logv(const StrickMainardi& m, double rho, double l) {
  const double minus_c = -m.j0 - m.m0 * (m.alpha == 0.0 ? l : std::expm1(m.alpha * l) / m.alpha);
  return minus_c > 0.0 ? std::sqrt(rho * minus_c) / kPi : 0.0;
}

double sm_outer_integral(const StrickMainardi& m, double rho, const numerics::RealFunction& weight,
                         const numerics::QuadratureOptions& opts) {
  const double wstar = sm_outer_w(m);
  if (!(wstar < 1.0)) return 0.0;
  // r = Omega e^y, y = -ln w in (0, -ln w*), dr = r dy
  auto f = [&](double y) {
    const double r = m.omega * std::exp(y);
    // log v = log(1 - e^{-y}), formed accurately at both ends
    const double log_v = y > kLn2 ? std::log1p(-std::exp(-y)) : std::log(-std::expm1(-y));
    return weight(r) * sm_density_logv(m, rho, log_v) * r;
  };
  const double ymax = -std::log(wstar);
  double sum = 0.0, lo = 0.0;
  // Unit-length pieces in y keep the density's square-root endpoint resolved.
  for (double hi = std::min(ymax, 1.0); lo < ymax; lo = hi, hi = std::min(ymax, hi + 1.0))
    sum += numerics::integrate(f, lo, hi, numerics::SingularityHint::none(), opts).value;
  return sum;
}

double integrate_half_line(const numerics::RealFunction& f, std::vector<double> breaks,
                           const numerics::QuadratureOptions& opts) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::remove_if(breaks.begin(), breaks.end(), [](double b) { return !(b > 0.0) || !std::isfinite(b); }),
               breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  double lo = 0.0;
  double sum = 0.0;
  for (double b : breaks) {
    sum += numerics::integrate(f, lo, b, numerics::SingularityHint::none(), opts).value;
    lo = b;
  }
  return sum + numerics::exp_sinh(f, lo, lo > 0.0 ? lo : 1.0, opts).value;
}

numerics::QuadratureOptions default_quadrature() {
  static const numerics::QuadratureOptions opts = [] {
    numerics::QuadratureOptions o;
    if (const char* env = std::getenv("VISCOWAVE_TOL")) {
      char* end = nullptr;
      const double tol = std::strtod(env, &end);
      if (end != env && tol > 0.0 && tol < 1.0) {
        o.rel_tol = tol;
        o.abs_tol = 0.1 * tol;
      }
    }
    return o;
  }();
  return opts;
}

}  // namespace detail

bool has_zero_j1(const CreepModel& model) noexcept {
  if (model.family() != Family::StrickMainardi) return false;
  const auto& m = model.as<StrickMainardi>();
  if (m.alpha == 0.0 || m.m0 == 0.0) return false;
  const double m1 = m.m0 / m.alpha;
  return std::abs(m.j0 - m1) <= 1e-12 * std::abs(m1);
}

cdouble wavenumber(const MediumSpec& medium, cdouble p) {
  if (!(medium.model().j0() > 0.0)) fail(ErrorKind::Configuration, "wavenumber needs J0 > 0");
  return std::sqrt(medium.rho()) * p * std::sqrt(carson_transform(medium.model(), p));
}

cdouble g_tilde(const MediumSpec& medium, cdouble p) {
  const double j0 = medium.model().j0();
  if (!(j0 > 0.0)) fail(ErrorKind::Configuration, "g_tilde needs J0 > 0");
  const cdouble inc = carson_increment(medium.model(), p);
  return std::sqrt(medium.rho()) * inc / (std::sqrt(j0 + inc) + std::sqrt(j0));
}

double cut_edge_density(const MediumSpec& medium, double r) {
  if (!(r > 0.0)) fail(ErrorKind::Domain, "attenuation density needs r > 0");
  const CreepModel& model = medium.model();
  if (model.family() == Family::JeffreysLomnitzStrick && r > kJlsCutoff * model.as<JeffreysLomnitzStrick>().omega)
    return 0.0;
  const double j0 = model.j0();
  auto at = [&](double eps) {
    const cdouble p = std::polar(r, -(kPi - eps));
    const cdouble inc = carson_increment(model, p);
    const cdouble root = std::sqrt(j0 + inc);
    // Im sqrt(C) = Im C / (2 Re sqrt(C)); Im C = Im(C - J0) exactly
    const double im = (j0 + inc.real()) > 0.0 ? inc.imag() / (2.0 * root.real()) : root.imag();
    return std::sqrt(medium.rho()) / kPi * im;
  };
  const double f1 = at(1e-4), f2 = at(1e-5), f3 = at(1e-6);
  const double r12 = (10.0 * f2 - f1) / 9.0;
  const double r23 = (10.0 * f3 - f2) / 9.0;
  return std::max(0.0, (100.0 * r23 - r12) / 99.0);
}

double attenuation_density(const MediumSpec& medium, double r) {
  if (!(r > 0.0)) fail(ErrorKind::Domain, "attenuation density needs r > 0");
  const CreepModel& model = medium.model();
  if (model.family() != Family::StrickMainardi) return cut_edge_density(medium, r);
  const auto& m = model.as<StrickMainardi>();
  if (m.m0 == 0.0) return 0.0;
  if (r < m.omega) return detail::sm_density_u(m, medium.rho(), (m.omega - r) / r);
  const double w = m.omega / r;
  return w < 1.0 && w > detail::sm_outer_w(m) ? detail::sm_density_logv(m, medium.rho(), std::log1p(-w)) : 0.0;
}

double attenuation_density(const AttenuationSpectrum& spectrum, double r) {
  return attenuation_density(spectrum.medium(), r);
}

double g_zero(const MediumSpec& medium) {
  const double rate = initial_creep_rate(medium.model());
  if (!std::isfinite(rate)) return kInf;
  return medium.rho() * medium.c0() * rate / 2.0;
}

double total_mass(const MediumSpec& medium) {
  const CreepModel& model = medium.model();
  switch (model.family()) {
    case Family::StrickMainardi: {
      const auto& m = model.as<StrickMainardi>();
      if (m.m0 == 0.0) return 0.0;
      if (has_zero_j1(model)) return j1_zero::total_mass(m.alpha, m.omega, medium.rho(), m.m0 / m.alpha);
      const double rho = medium.rho();
      auto f = [&](double u) {
        const double w = 1.0 + u;
        return detail::sm_density_u(m, rho, u) / (w * w);
      };
      const auto opts = detail::default_quadrature();
      return m.omega * detail::integrate_half_line(f, {1.0}, opts) +
             detail::sm_outer_integral(m, rho, [](double) { return 1.0; }, opts);
    }
    case Family::JeffreysLomnitzStrick:
    case Family::Andrade:
      // Both have closed forms: N = g(0+) = J'(0+) / (2 c0 J0).
      return g_zero(medium);
  }
  return kInf;
}

double g_value(const MediumSpec& medium, double t) {
  if (!(t >= 0.0)) fail(ErrorKind::Domain, "g_value needs t >= 0");
  if (t == 0.0) {
    const double n = total_mass(medium);
    if (!std::isfinite(n)) fail(ErrorKind::InfiniteValue, "g(0+) is infinite for this medium");
    return n;
  }
  const CreepModel& model = medium.model();
  const auto opts = detail::default_quadrature();
  if (model.family() == Family::StrickMainardi) {
    const auto& m = model.as<StrickMainardi>();
    if (m.m0 == 0.0) return 0.0;
    const double rho = medium.rho();
    const double wt = m.omega * t;
    auto f = [&](double u) {
      const double w = 1.0 + u;
      return detail::sm_density_u(m, rho, u) * std::exp(-wt / w) / (w * w);
    };
    return m.omega * detail::integrate_half_line(f, {1.0, wt - 1.0}, opts) +
           detail::sm_outer_integral(m, rho, [t](double r) { return std::exp(-r * t); }, opts);
  }
  if (initial_creep_rate(model) == 0.0 && model.family() != Family::Andrade) return 0.0;
  auto f = [&](double r) { return std::exp(-r * t) * cut_edge_density(medium, r); };
  return detail::integrate_half_line(f, {1.0 / t}, opts);
}

AttenuationSpectrum::AttenuationSpectrum(MediumSpec medium)
    : medium_(std::move(medium)),
      support_sup_(kInf),
      total_mass_(viscowave::total_mass(medium_)) {
  if (medium_.model().family() == Family::StrickMainardi) {
    const auto& m = medium_.model().as<StrickMainardi>();
    support_sup_ = m.m0 == 0.0 ? 0.0 : m.omega / detail::sm_outer_w(m);
  }
}

double AttenuationSpectrum::density(double r) const { return attenuation_density(medium_, r); }

namespace j1_zero {

double density(double alpha, double omega, double rho, double m1, double r) {
  if (!(r > 0.0)) fail(ErrorKind::Domain, "density needs r > 0");
  if (r >= omega) return 0.0;
  return std::sqrt(rho * std::abs(m1)) / kPi * std::abs(std::sin(alpha * kPi / 2.0)) *
         std::pow((omega - r) / r, alpha / 2.0);
}

double total_mass(double alpha, double omega, double rho, double m1) {
  return std::abs(alpha) * omega * std::sqrt(rho * std::abs(m1)) / 2.0;
}

double g_value(double alpha, double omega, double rho, double m1, double t) {
  if (!(t >= 0.0)) fail(ErrorKind::Domain, "g_value needs t >= 0");
  // Euler integral of the density against e^{-rt}; equals total_mass at t = 0.
  return total_mass(alpha, omega, rho, m1) * specfun::hyp1f1(1.0 - alpha / 2.0, 2.0, -omega * t).value;
}

}  // namespace j1_zero

}  // namespace viscowave
