#include "viscowave/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "viscowave/error.hpp"

namespace viscowave::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kZeta3 = 1.2020569031595942853997381615114499907649862923405;

// Series and expansion budgets.
constexpr int kMaxSeriesTerms = 20000;
constexpr double kKummerSeriesOnly = 30.0;
constexpr double kKummerAsymptoticOnly = 700.0;

void check_hyp1f1_args(double a, double b, double x) {
  if (b != 1.0 && b != 2.0) fail(ErrorKind::Domain, "hyp1f1: b must be 1 or 2, got " + std::to_string(b));
  if (!(x <= 0.0)) fail(ErrorKind::Domain, "hyp1f1: argument must be <= 0, got " + std::to_string(x));
  if (!(a > -2.0 && a < 2.0)) fail(ErrorKind::Domain, "hyp1f1: a must lie in (-2, 2)");
}

}  // namespace

SpecialValue<double> hyp1f1_series(double a, double b, double x) {
  check_hyp1f1_args(a, b, x);
  const double z = -x;
  if (a == b) return {std::exp(x), kEps * std::exp(x)};
  if (z > kKummerAsymptoticOnly)
    fail(ErrorKind::Convergence, "hyp1f1: series branch overflows for |x| > 700");

  // 1F1(a, b; -z) = e^-z 1F1(b - a, b; z)
  const double c = b - a;
  double term = 1.0;
  double sum = 1.0;
  double abs_sum = 1.0;
  int n = 0;
  for (; n < kMaxSeriesTerms; ++n) {
    term *= (c + n) / ((b + n) * (n + 1)) * z;
    sum += term;
    abs_sum += std::abs(term);
    if (term == 0.0) break;
    if (n > z && std::abs(term) < 0.25 * kEps * std::abs(sum)) break;
  }
  if (n == kMaxSeriesTerms) fail(ErrorKind::Convergence, "hyp1f1: series did not converge");
  const double scale = std::exp(-z);
  return {scale * sum, scale * abs_sum * kEps * (2.0 + std::sqrt(static_cast<double>(n)))};
}

SpecialValue<double> hyp1f1_asymptotic(double a, double b, double x) {
  check_hyp1f1_args(a, b, x);
  const double z = -x;
  if (z <= 0.0) fail(ErrorKind::Domain, "hyp1f1: asymptotic branch needs x < 0");
  if (a == b) return {std::exp(x), kEps * std::exp(x)};

  const double prefactor = std::tgamma(b) / std::tgamma(b - a) * std::pow(z, -a);
  double term = 1.0;
  double sum = 1.0;
  double smallest = 1.0;
  for (int n = 0; n < 500; ++n) {
    const double next = term * (a + n) * (1.0 + a - b + n) / ((n + 1) * z);
    if (next == 0.0) {
      smallest = 0.0;
      break;
    }
    if (std::abs(next) > std::abs(term)) break;
    term = next;
    sum += term;
    smallest = std::abs(term);
    if (smallest < 0.25 * kEps * std::abs(sum)) break;
  }
  // Exponentially small companion term. On the negative real axis it is
  // the Stokes-line average, carrying a factor cos(pi (b - a)).
  double companion = 0.0;
  double companion_err = 0.0;
  if (z < 745.0) {
    const double ga = std::tgamma(a);
    if (std::isfinite(ga) && ga != 0.0) {
      const double scale = std::tgamma(b) / ga * std::exp(-z) * std::pow(z, a - b);
      double t = 1.0, s2 = 1.0;
      for (int n = 0; n < 500; ++n) {
        const double next = t * (b - a + n) * (1.0 - a + n) / ((n + 1) * -z);
        if (next == 0.0 || std::abs(next) > std::abs(t)) break;
        t = next;
        s2 += t;
        if (std::abs(t) < 0.25 * kEps * std::abs(s2)) break;
      }
      companion = std::cos(kPi * (b - a)) * scale * s2;
      companion_err = std::abs(scale);
    }
  }
  const double value = prefactor * sum + companion;
  // The optimal-truncation remainder and the companion are of the same
  // order, so the companion's size bounds the residual.
  const double err = std::abs(prefactor) * (0.05 * smallest + 4.0 * kEps * std::abs(sum)) + 0.05 * companion_err;
  return {value, err};
}

SpecialValue<double> hyp1f1(double a, double b, double x) {
  check_hyp1f1_args(a, b, x);
  const double z = -x;
  if (z <= kKummerSeriesOnly) return hyp1f1_series(a, b, x);
  auto asym = hyp1f1_asymptotic(a, b, x);
  if (z > kKummerAsymptoticOnly) {
    if (!(asym.abs_error_estimate <= 1e-9 * std::abs(asym.value) + 1e-300))
      fail(ErrorKind::Convergence, "hyp1f1: asymptotic expansion failed to meet tolerance");
    return asym;
  }
  if (asym.abs_error_estimate <= 1e-15 * std::abs(asym.value)) return asym;
  return hyp1f1_series(a, b, x);
}

double kummer_increment(double alpha, double z) {
  if (z < 0.0) fail(ErrorKind::Domain, "kummer_increment: z must be >= 0");
  if (z == 0.0) return 0.0;
  if (z <= 2.0) {
    // sum_{k>=1} (1 - alpha)_{k-1} (-1)^{k+1} z^k / (k!)^2
    double poch = 1.0;  // (1 - alpha)_{k-1}
    double power_over_fact2 = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 200; ++k) {
      power_over_fact2 *= z / (static_cast<double>(k) * k);
      const double term = ((k % 2) ? 1.0 : -1.0) * poch * power_over_fact2;
      sum += term;
      if (std::abs(term) < 0.25 * kEps * std::abs(sum)) break;
      poch *= (1.0 - alpha + (k - 1));
    }
    return sum;
  }
  if (std::abs(alpha) < 1e-2 && z <= 700.0) {
    // Kummer's transformation gives e^{-z} sum_k D_k z^k / (k!)^2 with
    // D_k = [(1 + alpha)_k - k!] / alpha = k D_{k-1} + (1 + alpha)_{k-1}.
    // Every term is positive, so small alpha costs no digits.
    double d_over_fact = 0.0;  // D_k / k!
    double p_over_fact = 1.0;  // (1 + alpha)_k / k!
    double zk_over_fact = 1.0; // z^k / k!
    double sum = 0.0;
    for (int k = 1; k < 5000; ++k) {
      const double kk = static_cast<double>(k);
      d_over_fact = d_over_fact + p_over_fact / kk;
      p_over_fact *= (kk + alpha) / kk;
      zk_over_fact *= z / kk;
      const double term = d_over_fact * zk_over_fact;
      sum += term;
      if (kk > z && term < 0.25 * kEps * sum) break;
    }
    return std::exp(-z) * sum;
  }
  if (alpha == 0.0) return ein(z).value;
  return (hyp1f1(-alpha, 1.0, -z).value - 1.0) / alpha;
}

double expint_e1(double x) {
  if (!(x > 0.0)) fail(ErrorKind::Domain, "expint_e1: x must be > 0");
  if (x <= 1.0) {
    // -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    double term = 1.0;
    double sum = 0.0;
    for (int k = 1; k < 100; ++k) {
      term *= -x / k;
      sum -= term / k;
      if (std::abs(term / k) < 0.25 * kEps * std::abs(sum)) break;
    }
    return -kEulerGamma - std::log(x) + sum;
  }
  // Modified Lentz on the continued fraction for e^x E1(x).
  const double tiny = 1e-300;
  double bcf = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / bcf;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * i;
    bcf += 2.0;
    d = 1.0 / (an * d + bcf);
    c = bcf + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h * std::exp(-x);
  }
  fail(ErrorKind::Convergence, "expint_e1: continued fraction did not converge");
}

SpecialValue<double> ein(double x) {
  if (!(x >= 0.0)) fail(ErrorKind::Domain, "ein: x must be >= 0");
  if (x == 0.0) return {0.0, 0.0};
  if (x <= 2.0) {
    double term = 1.0;
    double sum = 0.0;
    double abs_sum = 0.0;
    for (int k = 1; k < 200; ++k) {
      term *= x / k;
      const double t = ((k % 2) ? 1.0 : -1.0) * term / k;
      sum += t;
      abs_sum += std::abs(t);
      if (std::abs(t) < 0.25 * kEps * sum) break;
    }
    return {sum, 4.0 * kEps * abs_sum};
  }
  if (x <= 40.0) {
    // Ein(x) = e^-x sum_{n>=1} x^n H_n / n!, all terms positive.
    double term = 1.0;
    double harmonic = 0.0;
    double sum = 0.0;
    int n = 1;
    for (; n < 1000; ++n) {
      term *= x / n;
      harmonic += 1.0 / n;
      const double t = term * harmonic;
      sum += t;
      if (n > x && t < 0.25 * kEps * sum) break;
    }
    const double value = std::exp(-x) * sum;
    return {value, value * kEps * (2.0 + std::sqrt(static_cast<double>(n)))};
  }
  const double value = std::log(x) + kEulerGamma + expint_e1(x);
  return {value, 4.0 * kEps * value};
}

namespace {

struct ContinuedFraction {
  cdouble scaled;               // e^z E_nu(z)
  cdouble one_minus_tail;       // 1 - S, with 1/scaled = z + nu - nu S
};

// e^z E_nu(z) = 1/(b0 + a1/(b1 + a2/(b2 + ...))) with b_i = z + nu + 2i and
// a_i = -i (nu - 1 + i). The tail S = 1/(b1 + a2/(b2 + ...)) is returned as
// well; a1 = -nu then gives 1/scaled = z + nu - nu S.
ContinuedFraction expint_continued_fraction(double nu, cdouble z) {
  const double tiny = 1e-300;
  cdouble b = z + nu + 2.0;
  cdouble f = b;
  cdouble c = f;
  cdouble d = 0.0;
  int j = 2;
  for (; j < 2000000; ++j) {
    const double an = -static_cast<double>(j) * (nu - 1.0 + j);
    b += 2.0;
    d = b + an * d;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const cdouble del = c * d;
    f *= del;
    if (std::abs(del - 1.0) < 2.0 * kEps) break;
  }
  if (j == 2000000) fail(ErrorKind::Convergence, "expint: continued fraction did not converge");
  const cdouble tail = 1.0 / f;
  const cdouble scaled = 1.0 / (z + nu - nu * tail);
  return {scaled, 1.0 - tail};
}

cdouble expm1_over_x(cdouble x) {
  if (std::abs(x) < 1e-3) {
    cdouble term = 1.0;
    cdouble sum = 1.0;
    for (int k = 2; k < 12; ++k) {
      term *= x / static_cast<double>(k);
      sum += term;
    }
    return sum;
  }
  return (std::exp(x) - 1.0) / x;
}

// Gamma(1 - nu) z^(nu - 1) combined with the k = n - 1 series term, for nu
// within 1e-3 of the positive integer n.
cdouble near_integer_pair(int n, double delta, cdouble z) {
  const double psi0 = (n == 1) ? -kEulerGamma : 1.0 - kEulerGamma;
  const double psi1 = (n == 1) ? kPi * kPi / 6.0 : kPi * kPi / 6.0 - 1.0;
  const double psi2 = (n == 1) ? -2.0 * kZeta3 : -2.0 * kZeta3 + 2.0;
  const double pi4 = kPi * kPi * kPi * kPi;
  const double psi3 = (n == 1) ? pi4 / 15.0 : pi4 / 15.0 - 6.0;
  const cdouble l_over_delta =
      std::log(z) - (psi0 + psi1 * delta / 2.0 + psi2 * delta * delta / 6.0 + psi3 * delta * delta * delta / 24.0) +
      (kPi * kPi * delta / 6.0 + pi4 * delta * delta * delta / 180.0);
  const cdouble l = delta * l_over_delta;
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^(n-1)
  // (n - 1)! = 1 for n in {1, 2}
  return sign * std::pow(z, static_cast<double>(n - 1)) * (-l_over_delta * expm1_over_x(l));
}

SpecialValue<cdouble> expint_series(double nu, cdouble z) {
  int near_n = 0;
  double delta = 0.0;
  for (int n = 1; n <= 2; ++n) {
    if (std::abs(nu - n) < 1e-3) {
      near_n = n;
      delta = nu - n;
    }
  }
  cdouble sum = 0.0;
  double abs_sum = 0.0;
  cdouble power = 1.0;  // (-z)^k / k!
  const double zabs = std::abs(z);
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    if (k > 0) power *= -z / static_cast<double>(k);
    if (near_n != 0 && k == near_n - 1) continue;
    const cdouble term = power / (1.0 - nu + k);
    sum -= term;
    abs_sum += std::abs(term);
    if (k > zabs && std::abs(term) < 0.25 * kEps * std::abs(sum)) break;
  }
  cdouble lead;
  if (near_n != 0) {
    lead = near_integer_pair(near_n, delta, z);
  } else {
    lead = std::tgamma(1.0 - nu) * std::pow(z, nu - 1.0);
  }
  const cdouble value = lead + sum;
  return {value, 4.0 * kEps * (abs_sum + std::abs(lead))};
}

bool use_series(cdouble z) {
  const double r = std::abs(z);
  if (r < 1.0) return true;
  // Near the negative real axis the series terms are no larger than the
  // result itself, while the continued fraction converges slowly there.
  return z.real() < 0.0 && r < 600.0 && (r + z.real()) < 8.0;
}

void check_expint_args(double nu, cdouble z) {
  if (!(nu >= -1.0 && nu <= 2.0)) fail(ErrorKind::Domain, "expint: order must lie in [-1, 2]");
  if (z.imag() == 0.0 && z.real() <= 0.0)
    fail(ErrorKind::BranchCut, "expint: argument on the closed negative real axis");
}

}  // namespace

SpecialValue<cdouble> expint(double nu, cdouble z) {
  check_expint_args(nu, z);
  if (use_series(z)) return expint_series(nu, z);
  const auto cf = expint_continued_fraction(nu, z);
  const cdouble value = std::exp(-z) * cf.scaled;
  return {value, 8.0 * kEps * std::abs(value)};
}

cdouble expint_scaled(double nu, cdouble z) {
  check_expint_args(nu, z);
  if (use_series(z)) return std::exp(z) * expint_series(nu, z).value;
  return expint_continued_fraction(nu, z).scaled;
}

cdouble expint_reduced(double nu, cdouble z) {
  check_expint_args(nu, z);
  if (nu == 0.0) return expint_scaled(1.0, z);
  if (use_series(z)) {
    const cdouble scaled = std::exp(z) * expint_series(nu, z).value;
    return (1.0 - z * scaled) / nu;
  }
  const auto cf = expint_continued_fraction(nu, z);
  return cf.scaled * cf.one_minus_tail;
}

cdouble log1p(cdouble w) {
  if (std::abs(w) >= 0.25) return std::log(1.0 + w);
  // alternating series, |w|^k / k below eps after about 27 terms
  cdouble power = w;
  cdouble sum = 0.0;
  for (int k = 1; k < 60; ++k) {
    const cdouble term = power / static_cast<double>(k);
    sum += (k % 2) ? term : -term;
    if (std::abs(term) < 0.25 * kEps * std::abs(sum)) break;
    power *= w;
  }
  return sum;
}

cdouble expm1(cdouble z) {
  if (std::abs(z) >= 0.25) return std::exp(z) - 1.0;
  cdouble term = z;
  cdouble sum = z;
  for (int k = 2; k < 40; ++k) {
    term *= z / static_cast<double>(k);
    sum += term;
    if (std::abs(term) < 0.25 * kEps * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace viscowave::specfun
