#include "viscowave/wavefront.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "viscowave/error.hpp"
#include "viscowave/spectrum.hpp"

namespace viscowave {

namespace {

// 4-point Lagrange interpolation of uniformly sampled f at fractional index s,
// with f = 0 before the first sample.
double interpolate(const std::vector<double>& f, double s) {
  const long n = static_cast<long>(f.size());
  long j = static_cast<long>(std::floor(s));
  const double frac = s - j;
  if (frac == 0.0 && j >= 0 && j < n) return f[j];
  j = std::clamp<long>(j, 0, n - 3);
  const double x = s - j;  // position relative to node j, nodes at -1, 0, 1, 2
  auto at = [&](long k) { return k < 0 ? 0.0 : f[std::min(k, n - 1)]; };
  const double fm = at(j - 1), f0 = at(j), f1 = at(j + 1), f2 = at(j + 2);
  return -fm * x * (x - 1.0) * (x - 2.0) / 6.0 + f0 * (x + 1.0) * (x - 1.0) * (x - 2.0) / 2.0 -
         f1 * (x + 1.0) * x * (x - 2.0) / 2.0 + f2 * (x + 1.0) * x * (x - 1.0) / 6.0;
}

}  // namespace

bool supports_shock(const MediumSpec& medium) { return std::isfinite(initial_creep_rate(medium.model())); }

double jump_amplitude(const MediumSpec& medium, double distance) {
  if (!(distance >= 0.0)) fail(ErrorKind::Domain, "distance must be >= 0");
  if (!supports_shock(medium)) fail(ErrorKind::Unsupported, "medium has unbounded attenuation and no wavefront jump");
  return std::exp(-g_zero(medium) * distance) / (2.0 * medium.rho());
}

numerics::InversionResult front_h(const MediumSpec& medium, double tau, double distance,
                                  const numerics::InversionConfig& config) {
  if (!(distance > 0.0)) fail(ErrorKind::Domain, "distance must be > 0");
  if (!(tau >= 0.0)) fail(ErrorKind::Domain, "tau must be >= 0");
  if (tau == 0.0) return {supports_shock(medium) ? std::exp(-g_zero(medium) * distance) : 0.0, 0.0};
  auto F = [&](cdouble p) { return std::exp(-p * g_tilde(medium, p) * distance) / p; };
  return numerics::inverse_laplace_detailed(F, tau, config);
}

WavefrontProfile front_profile(const MediumSpec& medium, double distance, const std::vector<double>& tau_grid,
                               const numerics::InversionConfig& config, int threads) {
  if (!(distance > 0.0)) fail(ErrorKind::Domain, "distance must be > 0");
  if (tau_grid.empty()) fail(ErrorKind::Precondition, "tau grid is empty");
  if (!(tau_grid.front() >= 0.0)) fail(ErrorKind::Precondition, "tau grid must start at tau >= 0");
  if (!std::is_sorted(tau_grid.begin(), tau_grid.end()))
    fail(ErrorKind::Precondition, "tau grid must be sorted ascending");
  config.validate();

  WavefrontProfile out;
  out.distance = distance;
  out.arrival_time = distance / medium.c0();
  out.jump = supports_shock(medium) ? jump_amplitude(medium, distance) : 0.0;
  out.tau_grid = tau_grid;
  const std::size_t n = tau_grid.size();
  out.h_values.resize(n);
  out.h_error.resize(n);
  out.near_front_values.resize(n);
  out.green_values.resize(n);
  std::vector<std::exception_ptr> errors(n);
  const bool shock = supports_shock(medium);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < n; i += stride) {
      try {
        const double tau = tau_grid[i];
        const auto h = front_h(medium, tau, distance, config);
        out.h_values[i] = h.value;
        out.h_error[i] = h.error_estimate;
        out.green_values[i] = h.value / (2.0 * medium.rho());
        out.near_front_values[i] =
            (tau == 0.0 && !shock) ? 0.0 : std::exp(-g_value(medium, tau) * distance);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = static_cast<std::size_t>(std::clamp(threads, 1, 64));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < workers; ++k) pool.emplace_back(work, k, workers);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const Error& e) {
      throw Error(e.kind(), e.detail() + " (at tau = " + std::to_string(tau_grid[i]) + ")");
    }
  }
  return out;
}

double green_near_front(const MediumSpec& medium, double t, double x) {
  const double ax = std::abs(x);
  const double arrival = ax / medium.c0();
  if (t < arrival) return 0.0;
  const double tau = t - arrival;
  if (ax == 0.0) return 1.0 / (2.0 * medium.rho());
  if (tau == 0.0) return supports_shock(medium) ? jump_amplitude(medium, ax) : 0.0;
  return std::exp(-g_value(medium, tau) * ax) / (2.0 * medium.rho());
}

double green_bromwich(const MediumSpec& medium, double t, double x, double margin,
                      const numerics::InversionConfig& config) {
  const double ax = std::abs(x);
  const double c0 = medium.c0();
  const double arrival = ax / c0;
  if (margin < 0.0) margin = 1e-3 * arrival;
  if (!(margin > 0.0)) fail(ErrorKind::Precondition, "Bromwich inversion needs a positive margin behind the front");
  if (!(t >= arrival + margin)) fail(ErrorKind::Precondition, "Bromwich inversion needs t >= |x|/c0 + margin");
  const double rho = medium.rho();
  // c0 kappa / p = 1 + c0 g~, and the factor e^{-p |x|/c0} is the shift to
  // retarded time.
  auto F = [&](cdouble p) {
    const cdouble g = g_tilde(medium, p);
    return (1.0 + c0 * g) * std::exp(-p * g * ax) / (2.0 * rho * p);
  };
  return numerics::inverse_laplace(F, t - arrival, config);
}

std::vector<double> propagate_pulse(const MediumSpec& medium, const std::vector<double>& pulse, double dt, double x) {
  if (!(dt > 0.0) || !std::isfinite(dt)) fail(ErrorKind::Precondition, "dt must be > 0");
  if (pulse.size() < 4) fail(ErrorKind::Precondition, "pulse needs at least 4 samples");
  double peak = 0.0;
  for (double v : pulse) {
    if (!std::isfinite(v)) fail(ErrorKind::Precondition, "pulse samples must be finite");
    peak = std::max(peak, std::abs(v));
  }
  if (std::abs(pulse.front()) > 1e-12 * peak) fail(ErrorKind::Precondition, "pulse must start from f(0) = 0");

  const double ax = std::abs(x);
  const double arrival = ax / medium.c0();
  const double rho = medium.rho();
  const bool shock = supports_shock(medium);
  const double a = shock ? std::exp(-g_zero(medium) * ax) / (2.0 * rho) : 0.0;

  const std::size_t m = pulse.size();
  const std::size_t n0 = static_cast<std::size_t>(std::ceil(arrival / dt - 1e-12));
  const double frac = std::max(0.0, n0 * dt - arrival);  // first sample lies frac after the front

  // f' by central differences, second-order one-sided at the ends.
  std::vector<double> df(m);
  df[0] = (-3.0 * pulse[0] + 4.0 * pulse[1] - pulse[2]) / (2.0 * dt);
  for (std::size_t j = 1; j + 1 < m; ++j) df[j] = (pulse[j + 1] - pulse[j - 1]) / (2.0 * dt);
  df[m - 1] = (3.0 * pulse[m - 1] - 4.0 * pulse[m - 2] + pulse[m - 3]) / (2.0 * dt);

  // G1 at sigma_i = frac + i dt behind the front.
  std::vector<double> g1(m, 0.0);
  if (ax > 0.0) {
    for (std::size_t i = 0; i < m; ++i) {
      const double sigma = frac + i * dt;
      if (sigma == 0.0) continue;  // G1(0+) = 0 in both cases
      g1[i] = std::exp(-g_value(medium, sigma) * ax) / (2.0 * rho) - a;
    }
  }
  const double front_weight = ax > 0.0 ? a : 1.0 / (2.0 * rho);

  std::vector<double> u(n0 + m, 0.0);
  for (std::size_t k = n0; k < n0 + m; ++k) {
    const std::size_t J = k - n0;
    double conv = 0.0;
    if (J >= 1) {
      conv += 0.5 * (g1[0] * df[J] + g1[J] * df[0]);
      for (std::size_t i = 1; i < J; ++i) conv += g1[i] * df[J - i];
      conv *= dt;
    }
    conv += 0.5 * frac * g1[0] * df[J];
    u[k] = front_weight * interpolate(pulse, J + frac / dt) + conv;
  }
  return u;
}

}  // namespace viscowave
