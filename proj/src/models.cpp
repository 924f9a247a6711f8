#include "viscowave/models.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "viscowave/error.hpp"
#include "viscowave/specfun.hpp"

namespace viscowave {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = specfun::kPi;

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::Domain, what);
}

bool nonneg(double v) { return v >= 0.0 && std::isfinite(v); }

void validate(const StrickMainardi& p) {
  require(nonneg(p.j0), "Strick-Mainardi: J0 must be finite and >= 0");
  require(nonneg(p.m0), "Strick-Mainardi: M0 must be finite and >= 0");
  require(p.alpha > -1.0 && p.alpha < 1.0, "Strick-Mainardi: alpha must lie in (-1, 1)");
  require(p.omega > 0.0 && std::isfinite(p.omega), "Strick-Mainardi: Omega must be > 0");
}

void validate(const JeffreysLomnitzStrick& p) {
  require(nonneg(p.j0), "JLS: J0 must be finite and >= 0");
  require(nonneg(p.m0), "JLS: M0 must be finite and >= 0");
  // The Carson transform needs E_nu with nu = 1 - alpha <= 3; the
  // exponential-integral routines cover orders up to 2 directly.
  require(p.alpha >= -2.0 && p.alpha <= 1.0, "JLS: alpha must lie in [-2, 1]");
  require(p.omega > 0.0 && std::isfinite(p.omega), "JLS: Omega must be > 0");
}

void validate(const Andrade& p) {
  require(nonneg(p.j0), "Andrade: J0 must be finite and >= 0");
  require(nonneg(p.j1), "Andrade: J1 must be finite and >= 0");
  require(nonneg(p.j2), "Andrade: J2 must be finite and >= 0");
  require(p.alpha > 0.0 && p.alpha <= 1.0, "Andrade: alpha must lie in (0, 1]");
}

void check_branch(cdouble p) {
  if (p.imag() == 0.0 && p.real() <= 0.0) {
    std::ostringstream os;
    os << "p = " << p.real() << " lies on the closed negative real axis";
    fail(ErrorKind::BranchCut, os.str());
  }
  if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) fail(ErrorKind::Domain, "p must be finite");
}

}  // namespace

const char* to_string(Family family) noexcept {
  switch (family) {
    case Family::StrickMainardi: return "strick-mainardi";
    case Family::JeffreysLomnitzStrick: return "jls";
    case Family::Andrade: return "andrade";
  }
  return "unknown";
}

const char* to_string(Material material) noexcept { return material == Material::Solid ? "solid" : "fluid"; }

CreepModel::CreepModel(const StrickMainardi& p) : params_(p) { validate(p); }
CreepModel::CreepModel(const JeffreysLomnitzStrick& p) : params_(p) { validate(p); }
CreepModel::CreepModel(const Andrade& p) : params_(p) { validate(p); }

CreepModel CreepModel::strick_mainardi(double j0, double m0, double alpha, double omega) {
  return CreepModel(StrickMainardi{j0, m0, alpha, omega});
}
CreepModel CreepModel::becker(double j0, double m0, double omega) {
  return CreepModel(StrickMainardi{j0, m0, 0.0, omega});
}
CreepModel CreepModel::jls(double j0, double m0, double alpha, double omega) {
  return CreepModel(JeffreysLomnitzStrick{j0, m0, alpha, omega});
}
CreepModel CreepModel::andrade(double j0, double j1, double j2, double alpha) {
  return CreepModel(Andrade{j0, j1, j2, alpha});
}

double CreepModel::j0() const noexcept {
  return std::visit([](const auto& p) { return p.j0; }, params_);
}

MediumSpec::MediumSpec(CreepModel model, double rho) : model_(std::move(model)), rho_(rho) {
  require(rho > 0.0 && std::isfinite(rho), "density must be finite and > 0");
}

MediumSpec MediumSpec::with_front_speed(CreepModel model, double c0) {
  require(c0 > 0.0 && std::isfinite(c0), "front speed must be finite and > 0");
  const double j0 = model.j0();
  if (!(j0 > 0.0)) fail(ErrorKind::Configuration, "a finite front speed needs J0 > 0");
  return MediumSpec(std::move(model), 1.0 / (c0 * c0 * j0));
}

double MediumSpec::c0() const {
  const double j0 = model_.j0();
  if (!(j0 > 0.0)) fail(ErrorKind::Configuration, "J0 = 0 gives an infinite front speed");
  return 1.0 / std::sqrt(rho_ * j0);
}

double MediumSpec::slowness() const noexcept { return std::sqrt(rho_ * model_.j0()); }

double creep_value(const CreepModel& model, double t) {
  if (!(t >= 0.0)) fail(ErrorKind::Domain, "creep_value: t must be >= 0");
  return std::visit(
      Overloaded{
          [t](const StrickMainardi& p) {
            const double z = p.omega * t;
            if (p.alpha == 0.0) return p.j0 + p.m0 * specfun::ein(z).value;
            return p.j0 + p.m0 * specfun::kummer_increment(p.alpha, z);
          },
          [t](const JeffreysLomnitzStrick& p) {
            const double l = std::log1p(p.omega * t);
            if (p.alpha == 0.0) return p.j0 + p.m0 * l;
            return p.j0 + p.m0 * std::expm1(p.alpha * l) / p.alpha;
          },
          [t](const Andrade& p) { return p.j0 + p.j1 * t + p.j2 * std::pow(t, p.alpha); },
      },
      model.params());
}

double creep_rate(const CreepModel& model, double t) {
  if (!(t >= 0.0)) fail(ErrorKind::Domain, "creep_rate: t must be >= 0");
  return std::visit(
      Overloaded{
          [t](const StrickMainardi& p) {
            return p.m0 * p.omega * specfun::hyp1f1(1.0 - p.alpha, 2.0, -p.omega * t).value;
          },
          [t](const JeffreysLomnitzStrick& p) {
            return p.m0 * p.omega * std::exp((p.alpha - 1.0) * std::log1p(p.omega * t));
          },
          [t](const Andrade& p) {
            if (p.alpha == 1.0) return p.j1 + p.j2;
            if (p.j2 == 0.0) return p.j1;
            if (t == 0.0) fail(ErrorKind::Singularity, "Andrade creep rate is unbounded at t = 0");
            return p.j1 + p.alpha * p.j2 * std::pow(t, p.alpha - 1.0);
          },
      },
      model.params());
}

double initial_creep_rate(const CreepModel& model) noexcept {
  return std::visit(Overloaded{
                        [](const StrickMainardi& p) { return p.m0 * p.omega; },
                        [](const JeffreysLomnitzStrick& p) { return p.m0 * p.omega; },
                        [](const Andrade& p) {
                          if (p.alpha == 1.0) return p.j1 + p.j2;
                          return p.j2 > 0.0 ? kInf : p.j1;
                        },
                    },
                    model.params());
}

cdouble carson_increment(const CreepModel& model, cdouble p) {
  check_branch(p);
  return std::visit(
      Overloaded{
          [p](const StrickMainardi& m) -> cdouble {
            const cdouble l = specfun::log1p(m.omega / p);
            if (m.alpha == 0.0) return m.m0 * l;
            return (m.m0 / m.alpha) * specfun::expm1(m.alpha * l);
          },
          [p](const JeffreysLomnitzStrick& m) -> cdouble {
            // M0 e^q E_{1-alpha}(q) with q = p / Omega, written through the
            // recurrence so that the order stays within [-1, 2].
            return m.m0 * specfun::expint_reduced(-m.alpha, p / m.omega);
          },
          [p](const Andrade& m) -> cdouble {
            // Carson transform of J2 t^alpha is J2 Gamma(1 + alpha) p^-alpha.
            return m.j1 / p + m.j2 * std::tgamma(1.0 + m.alpha) * std::exp(-m.alpha * std::log(p));
          },
      },
      model.params());
}

cdouble carson_transform(const CreepModel& model, cdouble p) { return model.j0() + carson_increment(model, p); }

double retardation_density(const CreepModel& model, double r) {
  if (!(r > 0.0)) fail(ErrorKind::Domain, "retardation_density: r must be > 0");
  return std::visit(
      Overloaded{
          [r](const StrickMainardi& m) {
            if (r >= m.omega) return 0.0;
            if (m.alpha == 0.0) return m.m0 / r;
            const double weight = std::sin(m.alpha * kPi) / (m.alpha * kPi);
            return weight * m.m0 / r * std::pow(m.omega / r - 1.0, m.alpha);
          },
          [r](const JeffreysLomnitzStrick& m) {
            if (m.alpha == 1.0) return 0.0;  // linear creep: the measure sits at r = 0
            const double x = r / m.omega;
            return m.m0 / (m.omega * std::tgamma(1.0 - m.alpha)) * std::exp(-x) * std::pow(x, -m.alpha - 1.0);
          },
          [](const Andrade&) -> double {
            fail(ErrorKind::Unsupported, "retardation density is not available for the Andrade family");
          },
      },
      model.params());
}

double equilibrium_compliance(const CreepModel& model) noexcept {
  return std::visit(Overloaded{
                        [](const StrickMainardi& m) {
                          if (m.m0 == 0.0) return m.j0;
                          return m.alpha < 0.0 ? m.j0 - m.m0 / m.alpha : kInf;
                        },
                        [](const JeffreysLomnitzStrick& m) {
                          if (m.m0 == 0.0) return m.j0;
                          return m.alpha < 0.0 ? m.j0 - m.m0 / m.alpha : kInf;
                        },
                        [](const Andrade& m) { return (m.j1 > 0.0 || m.j2 > 0.0) ? kInf : m.j0; },
                    },
                    model.params());
}

Material classify(const CreepModel& model) noexcept {
  return std::isfinite(equilibrium_compliance(model)) ? Material::Solid : Material::Fluid;
}

}  // namespace viscowave
