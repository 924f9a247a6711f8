#pragma once

#include <complex>
#include <string>
#include <variant>

namespace viscowave {

using cdouble = std::complex<double>;

/// J(t) = J0 + (M0/alpha) [1F1(-alpha, 1; -Omega t) - 1]; alpha = 0 is Becker's
/// law J0 + M0 Ein(Omega t).
struct StrickMainardi {
  double j0 = 0.0;
  double m0 = 0.0;
  double alpha = 0.0;  // (-1, 1)
  double omega = 1.0;
};

/// J(t) = J0 + M0 [(1 + Omega t)^alpha - 1] / alpha; alpha = 0 is Lomnitz's
/// logarithmic law J0 + M0 ln(1 + Omega t).
struct JeffreysLomnitzStrick {
  double j0 = 0.0;
  double m0 = 0.0;
  double alpha = 0.0;  // [-2, 1]
  double omega = 1.0;
};

/// J(t) = J0 + J1 t + J2 t^alpha.
struct Andrade {
  double j0 = 0.0;
  double j1 = 0.0;
  double j2 = 0.0;
  double alpha = 1.0 / 3.0;  // (0, 1]
};

enum class Family { StrickMainardi, JeffreysLomnitzStrick, Andrade };
enum class Material { Solid, Fluid };

const char* to_string(Family family) noexcept;
const char* to_string(Material material) noexcept;

/// One of the creep-compliance families. Parameters are validated on
/// construction, so every CreepModel instance can be evaluated.
class CreepModel {
 public:
  using Variant = std::variant<StrickMainardi, JeffreysLomnitzStrick, Andrade>;

  CreepModel(const StrickMainardi& p);
  CreepModel(const JeffreysLomnitzStrick& p);
  CreepModel(const Andrade& p);

  static CreepModel strick_mainardi(double j0, double m0, double alpha, double omega);
  static CreepModel becker(double j0, double m0, double omega);
  static CreepModel jls(double j0, double m0, double alpha, double omega);
  static CreepModel andrade(double j0, double j1, double j2, double alpha);

  Family family() const noexcept { return static_cast<Family>(params_.index()); }
  const Variant& params() const noexcept { return params_; }
  double j0() const noexcept;

  template <typename T>
  const T& as() const { return std::get<T>(params_); }

 private:
  Variant params_;
};

/// A creep law together with the mass density. The front speed
/// c0 = (rho J0)^(-1/2) is finite only when J0 > 0.
class MediumSpec {
 public:
  MediumSpec(CreepModel model, double rho);

  /// Medium whose density is chosen so that the front speed equals c0.
  static MediumSpec with_front_speed(CreepModel model, double c0);

  const CreepModel& model() const noexcept { return model_; }
  double rho() const noexcept { return rho_; }

  /// Throws Configuration when J0 = 0.
  double c0() const;
  /// 1/c0 = (rho J0)^(1/2), zero allowed.
  double slowness() const noexcept;

 private:
  CreepModel model_;
  double rho_;
};

/// J(t), t >= 0.
double creep_value(const CreepModel& model, double t);

/// J'(t) from closed forms. t = 0 is accepted when the rate is bounded there.
double creep_rate(const CreepModel& model, double t);

/// J'(0+); +infinity for Andrade with J2 > 0 and alpha < 1.
double initial_creep_rate(const CreepModel& model) noexcept;

/// Carson transform p J~(p) on the principal branch, p off (-inf, 0].
cdouble carson_transform(const CreepModel& model, cdouble p);

/// p J~(p) - J0, evaluated without the cancellation of the plain difference.
cdouble carson_increment(const CreepModel& model, cdouble p);

/// Density H(r) of J(t) = J0 + int (1 - e^{-rt}) H(r) dr.
double retardation_density(const CreepModel& model, double r);

/// lim J(t) as t -> infinity, possibly +infinity.
double equilibrium_compliance(const CreepModel& model) noexcept;

Material classify(const CreepModel& model) noexcept;

}  // namespace viscowave
