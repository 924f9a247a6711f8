#pragma once

#include <complex>

#include "viscowave/models.hpp"

namespace viscowave {

/// Attenuation-dispersion measure nu(dr) = h(r) dr of a medium, defined by
/// kappa(p) = p/c0 + p int h(r) / (p + r) dr.
class AttenuationSpectrum {
 public:
  explicit AttenuationSpectrum(MediumSpec medium);

  const MediumSpec& medium() const noexcept { return medium_; }
  /// Strick-Mainardi: Omega, or the larger root r* of C(-r) = 0 when the
  /// Carson transform turns negative beyond Omega. +infinity otherwise.
  double support_sup() const noexcept { return support_sup_; }
  /// N = nu(]0, inf[), possibly +infinity. Computed once on construction.
  double total_mass() const noexcept { return total_mass_; }
  double density(double r) const;

 private:
  MediumSpec medium_;
  double support_sup_;
  double total_mass_;
};

/// kappa(p) = rho^(1/2) p [p J~(p)]^(1/2), principal branch.
cdouble wavenumber(const MediumSpec& medium, cdouble p);

/// g~(p) = kappa(p)/p - 1/c0, formed as rho^(1/2) (C - J0) / (C^(1/2) + J0^(1/2))
/// with C = p J~(p) so that large |p| keeps full relative accuracy.
cdouble g_tilde(const MediumSpec& medium, cdouble p);

/// h(r) >= 0. Strick-Mainardi uses the closed form in X(r), Y(r) on
/// (0, Omega) and (rho (-C(-r)))^(1/2)/pi where C(-r) < 0 beyond Omega; the
/// other families use the generic cut-edge evaluation below.
double attenuation_density(const AttenuationSpectrum& spectrum, double r);
double attenuation_density(const MediumSpec& medium, double r);

/// (rho^(1/2)/pi) Im [p J~(p)]^(1/2) on the lower edge of the cut,
/// p = r e^{-i(pi - eps)}, eps in {1e-4, 1e-5, 1e-6}, Richardson-extrapolated
/// to eps = 0. Applies to every family.
double cut_edge_density(const MediumSpec& medium, double r);

/// N: closed form where one exists, quadrature of h otherwise.
double total_mass(const MediumSpec& medium);

/// g(t) = int e^{-rt} h(r) dr. g(0) returns g(0+) when finite and throws
/// InfiniteValue otherwise.
double g_value(const MediumSpec& medium, double t);

/// g(0+) = rho c0 J'(0+) / 2, +infinity for Andrade with J2 > 0.
double g_zero(const MediumSpec& medium);

/// Strick-Mainardi with J1 = J0 - M0/alpha = 0, written in terms of
/// M1 = M0/alpha. These are stand-alone functions of the parameters so that
/// both signs of alpha can be examined; alpha < 0 has no admissible medium.
namespace j1_zero {
/// (sqrt(rho |M1|)/pi) |sin(alpha pi/2)| (Omega/r - 1)^(alpha/2) on (0, Omega).
double density(double alpha, double omega, double rho, double m1, double r);
/// |alpha| Omega sqrt(rho |M1|) / 2.
double total_mass(double alpha, double omega, double rho, double m1);
/// (|alpha| sqrt(rho |M1|) Omega / 2) 1F1(1 - alpha/2, 2; -Omega t).
double g_value(double alpha, double omega, double rho, double m1, double t);
}  // namespace j1_zero

/// True when the Strick-Mainardi parameters satisfy J0 = M0/alpha to
/// relative 1e-12.
bool has_zero_j1(const CreepModel& model) noexcept;

}  // namespace viscowave
