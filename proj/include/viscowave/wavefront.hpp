#pragma once

#include <vector>

#include "viscowave/models.hpp"
#include "viscowave/numerics.hpp"

namespace viscowave {

struct WavefrontProfile {
  double distance = 0.0;      // r, m
  double arrival_time = 0.0;  // r / c0, s
  double jump = 0.0;          // e^{-g(0+) r} / (2 rho), 0 without a shock
  std::vector<double> tau_grid;           // time after arrival, s
  std::vector<double> h_values;           // H(tau, r) by inverse Laplace transform
  std::vector<double> h_error;            // inversion error estimates
  std::vector<double> near_front_values;  // e^{-g(tau) r}
  std::vector<double> green_values;       // H(tau, r) / (2 rho)
};

/// True iff J'(0+) is finite, equivalently g(0+) < infinity.
bool supports_shock(const MediumSpec& medium);

/// e^{-g(0+) r} / (2 rho). Throws Unsupported for media without a shock.
double jump_amplitude(const MediumSpec& medium, double distance);

/// H(tau, r) = L^-1[e^{-p g~(p) r} / p](tau). tau = 0 returns the limit
/// e^{-g(0+) r} (0 for unbounded attenuation).
numerics::InversionResult front_h(const MediumSpec& medium, double tau, double distance,
                                  const numerics::InversionConfig& config = numerics::InversionConfig::dehoog());

/// The profile on an ascending tau grid, with the near-front law alongside.
WavefrontProfile front_profile(const MediumSpec& medium, double distance, const std::vector<double>& tau_grid,
                               const numerics::InversionConfig& config = numerics::InversionConfig::dehoog(),
                               int threads = 1);

/// 0 ahead of the front, e^{-g(t - |x|/c0) |x|} / (2 rho) behind it.
double green_near_front(const MediumSpec& medium, double t, double x);

/// Full Green's function from the Bromwich integral, normalized so that an
/// elastic medium gives theta(t - |x|/c0) / (2 rho):
/// u = L^-1[c0 kappa(p) e^{-p g~(p) |x|} / (2 rho p^2)](t - |x|/c0).
/// Requires t >= |x|/c0 + margin; a negative margin selects the default
/// 1e-3 |x|/c0.
double green_bromwich(const MediumSpec& medium, double t, double x, double margin = -1.0,
                      const numerics::InversionConfig& config = numerics::InversionConfig::dehoog());

/// u(t_k, x) at t_k = k dt for a pulse f sampled at t = 0, dt, 2dt, ... with
/// f(0) = 0: the front term a(x) f(t - |x|/c0) plus the trapezoidal
/// convolution of f' with G1 = G - a theta, G the near-front Green's
/// function. The output covers the arrival delay plus the pulse duration.
std::vector<double> propagate_pulse(const MediumSpec& medium, const std::vector<double>& pulse, double dt, double x);

}  // namespace viscowave
