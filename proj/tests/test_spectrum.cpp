#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "viscowave/duality.hpp"
#include "viscowave/error.hpp"
#include "viscowave/numerics.hpp"
#include "viscowave/specfun.hpp"
#include "viscowave/spectrum.hpp"

using namespace viscowave;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = specfun::kPi;

void expect_rel(double got, double want, double tol) { EXPECT_LE(std::abs(got - want), tol * std::abs(want)) << got; }

MediumSpec fig2(double alpha) {
  const double j0 = 4.1e-11;
  return MediumSpec::with_front_speed(CreepModel::strick_mainardi(j0, 0.026 * j0, alpha, 1.0), 2851.0);
}

MediumSpec unit_jls(double alpha) { return MediumSpec(CreepModel::jls(1, 1, alpha, 1), 1.0); }

// Strick-Mainardi with J0 = M1 = M0/alpha, alpha > 0.
MediumSpec j1_zero_medium(double alpha, double m1) {
  return MediumSpec(CreepModel::strick_mainardi(m1, alpha * m1, alpha, 1.0), 1.0);
}

double integrate_density(const MediumSpec& m, double hi) {
  auto h = [&](double r) { return attenuation_density(m, r); };
  return numerics::integrate(h, 0.0, hi).value;
}

}  // namespace

TEST(Wavenumber, ElasticLimit) {
  const MediumSpec m(CreepModel::strick_mainardi(2, 0, 0.5, 1), 3.0);
  for (double p : {1.0, 10.0, 100.0}) {
    EXPECT_LE(std::abs(wavenumber(m, p) - p / m.c0()), 1e-15 * p);
    EXPECT_EQ(g_tilde(m, p), cdouble(0.0));
  }
}

TEST(Wavenumber, RealOnPositiveAxis) {
  for (double p : {1e-3, 0.5, 7.0, 1e5}) {
    const cdouble k = wavenumber(unit_jls(0.5), p);
    EXPECT_LE(std::abs(k.imag()), 1e-14 * std::abs(k));
    EXPECT_GT(k.real(), 0.0);
  }
}

TEST(Wavenumber, LargeFrequencyGivesTotalMass) {
  const auto m = fig2(0.3);
  const double p = 1e6;
  const double lhs = std::abs(wavenumber(m, p) / p - 1.0 / m.c0()) * p;
  expect_rel(lhs, total_mass(m), 1e-3);
}

TEST(Wavenumber, CompleteBernsteinProxy) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> lmod(-3.0, 3.0), arg(0.01, kPi - 0.01);
  for (const auto& m : {fig2(-0.3), unit_jls(0.8), MediumSpec(CreepModel::andrade(1, 0.1, 1, 0.5), 1.0)}) {
    for (int i = 0; i < 100; ++i) {
      const cdouble p = std::polar(std::pow(10.0, lmod(rng)), arg(rng));
      EXPECT_GE(wavenumber(m, p).imag(), 0.0) << p;
    }
    double prev = 0.0;
    for (double p = 1e-6; p < 1e6; p *= 3.0) {
      const double k = wavenumber(m, p).real();
      EXPECT_GT(k, prev);
      prev = k;
    }
    EXPECT_LT(wavenumber(m, 1e-12).real(), 1e-5);
  }
}

TEST(Density, ZeroBeyondOmega) { EXPECT_EQ(attenuation_density(j1_zero_medium(0.5, 1.0), 2.0), 0.0); }

TEST(Density, J1ZeroClosedForm) {
  for (double alpha : {0.25, 0.5, 0.75}) {
    const auto m = j1_zero_medium(alpha, 1.3);
    for (double r : {0.01, 0.3, 0.9}) {
      const double expected = std::sqrt(1.3) / kPi * std::abs(std::sin(alpha * kPi / 2)) * std::pow(1 / r - 1, alpha / 2);
      expect_rel(attenuation_density(m, r), expected, 1e-12);
      expect_rel(j1_zero::density(alpha, 1.0, 1.0, 1.3, r), expected, 1e-14);
    }
  }
}

TEST(Density, JlsCutEdgeOracle) {
  // Approach the cut from above at p = -0.5 + i delta and extrapolate delta -> 0.
  const auto m = unit_jls(0.0);
  auto side = [&](double delta) {
    const cdouble p(-0.5, delta);
    return std::abs(std::sqrt(carson_transform(m.model(), p)).imag()) / kPi;
  };
  const double oracle = (10 * side(1e-7) - side(1e-6)) / 9;
  expect_rel(attenuation_density(m, 0.5), oracle, 1e-4);
}

TEST(Density, ClosedFormMatchesCutEdge) {
  for (double alpha : {-0.5, 0.0, 0.3}) {
    const MediumSpec m(CreepModel::strick_mainardi(1.0, 1.0, alpha, 1.0), 1.0);
    for (int i = 0; i < 20; ++i) {
      const double r = std::pow(10.0, -3.0 + 3.0 * (i + 0.5) / 20);
      expect_rel(attenuation_density(m, r), cut_edge_density(m, r), 1e-5);
    }
  }
}

TEST(Density, NonNegative) {
  for (const auto& m : {fig2(0.3), fig2(-0.3), unit_jls(-0.8), unit_jls(0.8)})
    for (double r = 1e-4; r < 1e4; r *= 1.7) EXPECT_GE(attenuation_density(m, r), 0.0);
  EXPECT_THROW(attenuation_density(unit_jls(0.0), 0.0), Error);
}

TEST(TotalMass, JlsAndAndrade) {
  EXPECT_DOUBLE_EQ(total_mass(unit_jls(0.3)), 0.5);
  EXPECT_EQ(total_mass(MediumSpec(CreepModel::andrade(1, 0, 1, 0.5), 1.0)), kInf);
}

TEST(TotalMass, J1ZeroClosedFormAgainstQuadrature) {
  const auto m = j1_zero_medium(0.5, 1.0);
  EXPECT_DOUBLE_EQ(total_mass(m), 0.25);
  expect_rel(integrate_density(m, 1.0), 0.25, 1e-8);
}

TEST(TotalMass, EqualsIntegralOfDensity) {
  for (const auto& m : {fig2(0.3), fig2(-0.3), unit_jls(0.0), unit_jls(-0.8)}) {
    const AttenuationSpectrum spec(m);
    auto h = [&](double r) { return spec.density(r); };
    double sum = 0.0;
    const double sup = spec.support_sup();
    if (std::isfinite(sup)) {
      sum = numerics::integrate(h, 0.0, 1.0).value + (sup > 1.0 ? numerics::integrate(h, 1.0, sup).value : 0.0);
    } else {
      sum = numerics::integrate(h, 0.0, 1.0).value + numerics::integrate(h, 1.0, 10.0).value +
            numerics::integrate(h, 10.0, numerics::kInf).value;
    }
    expect_rel(sum, spec.total_mass(), 1e-6);
  }
}

TEST(TotalMass, StrickOuterSupport) {
  // alpha < 0 makes C(-r) negative just beyond Omega, which carries part of N.
  const MediumSpec m(CreepModel::strick_mainardi(1, 1, -0.5, 1), 1.0);
  const AttenuationSpectrum spec(m);
  EXPECT_GT(spec.support_sup(), 1.0);
  EXPECT_GT(spec.density(0.5 * (1.0 + spec.support_sup())), 0.0);
  expect_rel(spec.total_mass(), 0.5, 1e-8);
}

TEST(GValue, ZeroLimitAndClosedForm) {
  EXPECT_DOUBLE_EQ(g_value(unit_jls(0.0), 0.0), 0.5);
  EXPECT_THROW(g_value(MediumSpec(CreepModel::andrade(1, 0, 1, 0.5), 1.0), 0.0), Error);
  EXPECT_THROW(g_value(unit_jls(0.0), -1.0), Error);
  const double alpha = 0.5, m1 = 2.0;
  const auto m = j1_zero_medium(alpha, m1);
  // mpmath quadrature of the density: tests/oracles/generate.py
  expect_rel(j1_zero::g_value(alpha, 1.0, 1.0, m1, 1.0), 0.25220953169050096786, 1e-12);
  for (double t : {0.1, 1.0, 10.0}) expect_rel(g_value(m, t), j1_zero::g_value(alpha, 1.0, 1.0, m1, t), 1e-8);
  expect_rel(j1_zero::g_value(alpha, 1.0, 1.0, m1, 0.0), j1_zero::total_mass(alpha, 1.0, 1.0, m1), 1e-15);
}

TEST(GValue, ZeroEqualsTotalMass) {
  for (const auto& m : {fig2(0.3), fig2(-0.3), unit_jls(0.8), unit_jls(0.0), unit_jls(-0.8),
                        MediumSpec(CreepModel::jls(1, 1, 0.5, 3), 1.0)})
    expect_rel(g_zero(m), total_mass(m), 1e-6);
  EXPECT_EQ(g_zero(MediumSpec(CreepModel::andrade(1, 0, 1, 0.5), 1.0)), kInf);
  const auto s = fig2(0.3);
  const auto& p = s.model().as<StrickMainardi>();
  expect_rel(g_zero(s), p.m0 * p.omega / (2 * s.c0() * p.j0), 1e-14);
}

TEST(GValue, BoundedByCreepRate) {
  for (const auto& m : {fig2(0.3), fig2(-0.3), unit_jls(0.0), MediumSpec(CreepModel::andrade(1, 0.1, 1, 0.5), 1.0)})
    for (double t = 1e-2; t <= 1e2; t *= 1.5)
      EXPECT_LE(g_value(m, t), m.rho() * m.c0() * creep_rate(m.model(), t) / 2 * (1 + 1e-9)) << t;
}

TEST(GValue, CompletelyMonotone) {
  for (const auto& m : {fig2(0.3), fig2(-0.3), unit_jls(0.8), MediumSpec(CreepModel::andrade(1, 0.1, 1, 0.5), 1.0)}) {
    const auto r =
        numerics::check_complete_monotonicity([&](double t) { return g_value(m, t); }, 1e-2, 1e2, 40, 1, 5, 1e-9);
    EXPECT_TRUE(r.passed) << r.worst_order;
  }
}

TEST(GValue, DecaysFasterThanInverseTimeForSolids) {
  const MediumSpec m(CreepModel::strick_mainardi(1, 1, -0.5, 1), 1.0);
  double prev = kInf;
  for (double t = 1e3; t <= 1e5; t *= 2) {
    const double tg = t * g_value(m, t);
    EXPECT_LT(tg, prev);
    prev = tg;
  }
}

TEST(GValue, AndradeLongTimeExponent) {
  const double alpha = 1.0 / 3;
  const MediumSpec m(CreepModel::andrade(1, 0, 1, alpha), 1.0);
  const double slope = std::log(g_value(m, 1e4) / g_value(m, 1e2)) / std::log(1e2);
  EXPECT_NEAR(slope, alpha / 2 - 1, 0.02);
}

TEST(GTilde, LargeFrequencyLimit) {
  for (const auto& m : {unit_jls(0.5), fig2(-0.3)}) {
    const double p = 1e8;
    expect_rel((p * g_tilde(m, p)).real(), total_mass(m), 1e-3);
  }
}

TEST(GTilde, SpectralIntegral) {
  const auto m = fig2(0.3);
  const AttenuationSpectrum spec(m);
  auto f = [&](double r) { return spec.density(r) / (1.0 + r); };
  const double sup = spec.support_sup();
  const double q = numerics::integrate(f, 0.0, 1.0).value + (sup > 1.0 ? numerics::integrate(f, 1.0, sup).value : 0.0);
  expect_rel(g_tilde(m, 1.0).real(), q, 1e-7);
}
