// Acceptance criteria: one PASS/FAIL line each, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "viscowave/duality.hpp"
#include "viscowave/error.hpp"
#include "viscowave/models.hpp"
#include "viscowave/numerics.hpp"
#include "viscowave/response.hpp"
#include "viscowave/specfun.hpp"
#include "viscowave/spectrum.hpp"
#include "viscowave/wavefront.hpp"

using namespace viscowave;

namespace {

constexpr double kPi = specfun::kPi;

int failures = 0;

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

// Runs one criterion. `body` fills `detail` and returns whether it holds;
// a runtime limit <= 0 means none is stated.
void criterion(int id, const char* name, double limit_s, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs > limit_s) {
    ok = false;
    detail += " (runtime over limit)";
  }
  if (!ok) ++failures;
  std::printf("%s %2d %s: %s [%.2f s]\n", ok ? "PASS" : "FAIL", id, name, detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

MediumSpec fig2(double alpha, bool relative) {
  const double j0 = 4.1e-11;
  const double m0 = relative ? 0.026 * j0 : 0.026;
  return MediumSpec::with_front_speed(CreepModel::strick_mainardi(j0, m0, alpha, 1.0), 2851.0);
}

MediumSpec fig3(double alpha) {
  return MediumSpec::with_front_speed(CreepModel::strick_mainardi(1, 1, alpha, 1), 1000.0);
}

MediumSpec fig4(double alpha) { return MediumSpec(CreepModel::jls(1, 1, alpha, 1), 1.0); }

MediumSpec fig1(double alpha) {
  return MediumSpec(CreepModel::strick_mainardi(4.1e-11, 16e-11 / (kPi * 50), alpha, 1.0), 1.0);
}

// Media behind the figure presets; all have finite total mass.
std::vector<MediumSpec> preset_media() {
  std::vector<MediumSpec> out;
  for (double a : {-0.5, 0.0, 0.5}) out.push_back(fig1(a));
  for (bool r : {true, false})
    for (double a : {0.3, -0.3}) out.push_back(fig2(a, r));
  for (double a : {-0.75, -0.5, 0.0, 0.5, 0.75}) out.push_back(fig3(a));
  for (double a : {0.8, 0.0, -0.8}) out.push_back(fig4(a));
  return out;
}

std::vector<double> log_grid(double lo, double hi, int n) { return make_grid(lo, hi, n, Spacing::Log); }

}  // namespace

int main() {
  criterion(1, "cross-path attenuation equivalence", 10.0, [](std::string& d) {
    std::vector<MediumSpec> media = {fig2(0.3, true), fig2(-0.3, true)};
    for (double a : {0.8, 0.0, -0.8}) media.push_back(fig4(a));
    double worst = 0.0;
    for (const auto& m : media) {
      for (double w : log_grid(1e-2, 1e2, 50)) {
        const auto x = response_direct(m, w);
        const auto y = response_spectral(m, w);
        worst = std::max({worst, rel(y.attenuation, x.attenuation), rel(y.dispersion, x.dispersion)});
      }
    }
    d = "max relative difference " + fmt("%.3e", worst) + " (tolerance 1e-6)";
    return worst <= 1e-6;
  });

  criterion(2, "closed-form total mass for J1 = 0", 2.0, [](std::string& d) {
    const double omega = 2.0, rho = 1.0, m1 = 1.3;
    double worst = 0.0;
    for (double a : {-0.75, -0.5, -0.25, 0.25, 0.5, 0.75}) {
      std::function<double(double)> h;
      MediumSpec medium(CreepModel::strick_mainardi(m1, std::abs(a) * m1, std::abs(a), omega), rho);
      if (a > 0) {
        h = [&](double r) { return attenuation_density(medium, r); };
      } else {
        // No admissible medium has J1 = 0 with alpha < 0; integrate the density law itself.
        h = [&, a](double r) { return j1_zero::density(a, omega, rho, m1, r); };
      }
      const double q = numerics::integrate(h, 0.0, omega).value;
      const double closed = std::abs(a) * omega * std::sqrt(rho * m1) / 2;
      worst = std::max(worst, rel(q, closed));
    }
    d = "max relative error " + fmt("%.3e", worst) + " (tolerance 1e-8)";
    return worst <= 1e-8;
  });

  criterion(3, "JLS total mass from the large-p wavenumber", 2.0, [](std::string& d) {
    double worst = 0.0;
    for (double a : {0.8, 0.0, -0.8}) {
      const auto m = fig4(a);
      std::vector<double> v;
      for (int k = 4; k <= 8; ++k) {
        const double p = std::pow(10.0, k);
        v.push_back(p * (wavenumber(m, p).real() / p - 1.0 / m.c0()));
      }
      // The remainder is O(1/p); eliminate it between the last two points.
      const double limit = (10 * v[4] - v[3]) / 9;
      const auto& jls = m.model().as<JeffreysLomnitzStrick>();
      worst = std::max(worst, rel(limit, jls.m0 / (2 * m.c0() * jls.j0)));
    }
    d = "max relative error " + fmt("%.3e", worst) + " (tolerance 1e-4)";
    return worst <= 1e-4;
  });

  criterion(4, "g(0+) equals N and g <= rho c0 J'/2", 0.0, [](std::string& d) {
    double worst_mass = 0.0, worst_ratio = 0.0;
    for (const auto& m : preset_media()) {
      worst_mass = std::max(worst_mass, rel(g_zero(m), total_mass(m)));
      for (double t : log_grid(1e-2, 1e2, 30))
        worst_ratio = std::max(worst_ratio, g_value(m, t) / (m.rho() * m.c0() * creep_rate(m.model(), t) / 2));
    }
    d = "max |g0 - N|/N " + fmt("%.3e", worst_mass) + " (tolerance 1e-6), max g/(rho c0 J'/2) " +
        fmt("%.12f", worst_ratio);
    return worst_mass <= 1e-6 && worst_ratio <= 1.0;
  });

  criterion(5, "creep-relaxation duality", 30.0, [](std::string& d) {
    double worst = 0.0;
    for (const auto& m : {CreepModel::strick_mainardi(1, 1, 0.5, 1), CreepModel::strick_mainardi(1, 1, -0.5, 1),
                          CreepModel::jls(1, 1, 0.0, 1)})
      worst = std::max(worst, numerics::verify_duality(m, {0.1, 1.0, 10.0}).max_residual);
    d = "max residual " + fmt("%.3e", worst) + " (tolerance 1e-5)";
    return worst <= 1e-5;
  });

  criterion(6, "wavefront profile", 0.0, [](std::string& d) {
    bool ok = true;
    double worst_start = 0.0, worst_near = 0.0, worst_drop = 0.0, lo = 1.0, hi = 0.0;
    for (double alpha : {0.5, -0.5}) {
      const auto m = fig3(alpha);
      for (double r : {1000.0, 5000.0}) {
        std::vector<double> tau;
        for (int i = 0; i <= 100; ++i) tau.push_back(0.01 * i);
        const auto p = front_profile(m, r, tau, numerics::InversionConfig::dehoog(), 4);
        for (std::size_t i = 1; i < tau.size(); ++i) worst_drop = std::max(worst_drop, p.h_values[i - 1] - p.h_values[i]);
        for (double h : p.h_values) lo = std::min(lo, h), hi = std::max(hi, h);
        worst_start = std::max(worst_start, std::abs(front_h(m, 1e-6, r).value - std::exp(-g_zero(m) * r)));
        for (double t : {0.002, 0.005, 0.01})
          worst_near = std::max(worst_near, rel(front_h(m, t, r).value, std::exp(-g_value(m, t) * r)));
      }
    }
    ok = worst_drop <= 0.0 && lo >= 0.0 && hi <= 1.0 && worst_start <= 1e-4 && worst_near <= 1e-2;
    d = "max decrease " + fmt("%.2e", worst_drop) + ", range [" + fmt("%.6f", lo) + ", " + fmt("%.6f", hi) +
        "], |H(0+) - e^(-g0 r)| " + fmt("%.2e", worst_start) + " (1e-4), near-front rel " + fmt("%.2e", worst_near) +
        " (1e-2)";
    return ok;
  });

  criterion(7, "Andrade high-frequency exponent", 0.0, [](std::string& d) {
    double worst_slope = 0.0, worst_formula = 0.0;
    std::string slopes;
    for (double alpha : {1.0 / 3, 0.5}) {
      const MediumSpec m(CreepModel::andrade(1, 0, 1, alpha), 1.0);
      const auto grid = log_grid(1e4, 1e6, 21);
      double sx = 0, sy = 0, sxx = 0, sxy = 0;
      for (double w : grid) {
        const double a = response_direct(m, w).attenuation;
        worst_formula = std::max(worst_formula, rel(a, andrade_attenuation_explicit(m, w)));
        const double x = std::log(w), y = std::log(a);
        sx += x, sy += y, sxx += x * x, sxy += x * y;
      }
      const double n = static_cast<double>(grid.size());
      const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
      worst_slope = std::max(worst_slope, std::abs(slope - (1 - alpha / 2)));
      slopes += fmt(" %.4f", slope) + fmt(" (want %.4f)", 1 - alpha / 2);
    }
    d = "slopes" + slopes + ", max deviation " + fmt("%.3f", worst_slope) + " (0.02), explicit formula rel " +
        fmt("%.2e", worst_formula) + " (1e-10)";
    return worst_slope <= 0.02 && worst_formula <= 1e-10;
  });

  criterion(8, "shock classification and jump decay", 0.0, [](std::string& d) {
    bool ok = true;
    for (const auto& m : preset_media()) ok = ok && supports_shock(m);
    for (double alpha : {1.0 / 3, 0.5, 0.9})
      ok = ok && !supports_shock(MediumSpec(CreepModel::andrade(1, 0.1, 1, alpha), 1.0));
    double worst = 0.0;
    for (const auto& m : {fig3(0.5), fig3(-0.5), fig4(0.0)}) {
      const double r1 = 1.0 / g_zero(m), r2 = 3.0 / g_zero(m);
      const double slope = std::log(jump_amplitude(m, r2) / jump_amplitude(m, r1)) / (r2 - r1);
      worst = std::max(worst, rel(slope, -g_zero(m)));
    }
    d = std::string("classification ") + (ok ? "correct" : "wrong") + ", log-slope rel error " + fmt("%.2e", worst) +
        " (1e-10)";
    return ok && worst <= 1e-10;
  });

  criterion(9, "special functions", 0.0, [](std::string& d) {
    bool ok = true;
    // Frozen mpmath values: tests/oracles/generate.py
    ok = ok && rel(specfun::hyp1f1(-0.5, 1, -2).value, 1.8130996534803382072) <= 1e-12;
    ok = ok && rel(specfun::hyp1f1(0.3, 2, -5).value, 0.64912606659175367165) <= 1e-12;
    ok = ok && rel(specfun::hyp1f1(-0.5, 1, -40).value, 7.1812416746094134997) <= 1e-12;
    ok = ok && rel(specfun::hyp1f1(0.75, 2, -1e4).value, 0.0011032419637883769496) <= 1e-9;
    // Integral representation oracle for 1F1(-a, 1; -2).
    const double a = 0.5;
    auto f = [&](double y) { return -std::expm1(-2.0 * y) * std::pow(y, -a - 1.0) * std::pow(1.0 - y, a); };
    const double q = numerics::integrate(f, 0.0, 1.0, numerics::SingularityHint::left_algebraic(-a)).value;
    ok = ok && rel(specfun::hyp1f1(-a, 1, -2).value, 1.0 + std::sin(a * kPi) / kPi * q) <= 1e-10;
    double overlap = 0.0;
    for (double x = -20.0; x >= -60.0; x -= 2.0)
      overlap = std::max(overlap, rel(specfun::hyp1f1_asymptotic(-0.5, 1, x).value, specfun::hyp1f1_series(-0.5, 1, x).value));
    ok = ok && overlap <= 1e-8;
    // Ein: alternating series at 1 and the logarithmic limit.
    double sum = 0.0, term = 1.0;
    for (int k = 1; k < 40; ++k) term /= k, sum += (k % 2 ? 1.0 : -1.0) * term / k;
    ok = ok && std::abs(specfun::ein(1.0).value - sum) <= 1e-13 * sum;
    ok = ok && std::abs(specfun::ein(100.0).value - std::log(100.0) - specfun::kEulerGamma) <= 1e-12;
    // E_nu: quadrature oracle for E_1(1), asymptotics at 50, and the recurrence.
    const double e1 = numerics::integrate([](double r) { return std::exp(-r) / r; }, 1.0, numerics::kInf).value;
    ok = ok && rel(specfun::expint(1.0, 1.0).value.real(), e1) <= 1e-12;
    // E_nu(z) ~ (e^-z / z)(1 - nu/z), here nu = -0.8
    const double asym = std::exp(-50.0) / 50.0 * (1.0 + 0.8 / 50.0);
    ok = ok && rel(specfun::expint(-0.8, 50.0).value.real(), asym) <= 1e-3;
    const cdouble z(1.5, 2.0);
    ok = ok && std::abs(specfun::expint(1.3, z).value - (std::exp(-z) - z * specfun::expint(0.3, z).value) / 0.3) <=
                   1e-9 * std::abs(specfun::expint(1.3, z).value);
    // Endpoint-singular quadrature identity.
    const double ident = numerics::integrate([&](double r) { return std::pow(1.0 / r - 1.0, a / 2); }, 0.0, 1.0,
                                             numerics::SingularityHint::left_algebraic(-a / 2))
                             .value;
    const double ident_err = rel(ident, (a * kPi / 2) / std::sin(a * kPi / 2));
    ok = ok && ident_err <= 1e-10;
    d = "series/asymptotic overlap " + fmt("%.2e", overlap) + ", identity rel " + fmt("%.2e", ident_err);
    return ok;
  });

  criterion(10, "complete monotonicity and sweep properties", 0.0, [](std::string& d) {
    int fails = 0, checks = 0;
    for (const auto& m : preset_media()) {
      const auto jr = numerics::check_complete_monotonicity([&](double t) { return creep_rate(m.model(), t); },
                                                            1e-2, 1e2, 40, 1, 6, 1e-13);
      const auto gr =
          numerics::check_complete_monotonicity([&](double t) { return g_value(m, t); }, 1e-2, 1e2, 40, 1, 5, 1e-9);
      fails += !jr.passed + !gr.passed;
      checks += 2;
    }
    auto check_sweep = [&](const MediumSpec& m, double lo, double hi, int n) {
      const auto rows = sweep(m, lo, hi, n, Spacing::Log, ResponsePath::Direct, 4);
      bool ok = rows.front().phase_speed <= m.c0();
      for (std::size_t i = 1; i < rows.size(); ++i)
        ok = ok && rows[i].attenuation >= rows[i - 1].attenuation && rows[i].phase_speed <= m.c0();
      fails += !ok;
      ++checks;
    };
    for (bool r : {true, false})
      for (double a : {0.3, -0.3}) check_sweep(fig2(a, r), 1e-2, 1e6, 161);
    for (double a : {0.8, 0.0, -0.8}) check_sweep(fig4(a), 1e-2, 1e4, 121);
    for (double a : {1.0 / 3, 0.5}) check_sweep(MediumSpec(CreepModel::andrade(1, 0.1, 1, a), 1.0), 1e-2, 1e6, 61);
    d = std::to_string(checks - fails) + " of " + std::to_string(checks) + " suites pass";
    return fails == 0;
  });

  std::printf("summary: %d of 10 criteria failed\n", failures);
  return failures ? 1 : 0;
}
