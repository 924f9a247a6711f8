#pragma once

#include <vector>

#include "viscowave/models.hpp"

namespace viscowave {

struct FrequencyResponseRow {
  double omega = 0.0;        // rad/s
  double attenuation = 0.0;  // A, 1/m
  double dispersion = 0.0;   // D, 1/m
  double phase_speed = 0.0;  // c, m/s, from 1/c = 1/c0 + D/omega
  double q_factor = 0.0;     // omega / (2 c A); +infinity when A = 0
};

enum class Spacing { Log, Linear };
enum class ResponsePath { Direct, Spectral };

/// A - iD = p g~(p) at p = -i omega, so A = Re kappa(-i omega) and
/// D = -Im kappa(-i omega) - omega/c0.
FrequencyResponseRow response_direct(const MediumSpec& medium, double omega);

/// A = omega^2 int h/(omega^2 + r^2) dr, D = omega int r h/(omega^2 + r^2) dr.
FrequencyResponseRow response_spectral(const MediumSpec& medium, double omega);

/// The Andrade attenuation in real arithmetic:
/// A = omega/(c0 sqrt 2) (|W| - X)^(1/2), W = X + iY with
/// X = 1 + b omega^-alpha cos(pi alpha/2),
/// Y = J1/(J0 omega) + b omega^-alpha sin(pi alpha/2), b = Gamma(1 + alpha) J2/J0.
double andrade_attenuation_explicit(const MediumSpec& medium, double omega);

/// 20 log10(e) A, the amplitude decibel convention.
double db_per_meter(double attenuation);
/// log10(e^-A), the literal expression quoted alongside Q in the paper.
double paper_db(double attenuation);

/// Inclusive grid; log spacing needs lo > 0.
std::vector<double> make_grid(double lo, double hi, int points, Spacing spacing);

/// Rows in ascending omega. `threads` > 1 evaluates grid points
/// concurrently; results do not depend on the thread count.
std::vector<FrequencyResponseRow> sweep(const MediumSpec& medium, double omega_min, double omega_max, int points,
                                        Spacing spacing, ResponsePath path, int threads = 1);

}  // namespace viscowave
