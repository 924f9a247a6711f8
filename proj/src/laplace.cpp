#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include "viscowave/error.hpp"
#include "viscowave/numerics.hpp"

namespace viscowave::numerics {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool finite(cdouble z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

cdouble sample(const TransformFunction& F, cdouble p) {
  const cdouble v = F(p);
  if (!finite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "transform is not finite at p = " << p;
    fail(ErrorKind::Domain, os.str());
  }
  return v;
}

// de Hoog, Knight and Stokes: the Fourier series of the damped function is
// summed through its continued-fraction (quotient-difference) form and the
// tail is replaced by the closed-form remainder.
InversionResult dehoog(const TransformFunction& F, double t, const InversionConfig& c) {
  const int M = c.terms;
  const int N = 2 * M;
  const double T = c.scale * t;
  const double gamma = -0.5 * std::log(c.tolerance) / T;

  std::vector<cdouble> a(N + 1);
  a[0] = 0.5 * sample(F, cdouble(gamma, 0.0));
  for (int k = 1; k <= N; ++k) a[k] = sample(F, cdouble(gamma, k * kPi / T));

  // q[i], e[i] hold the current column of the quotient-difference table.
  std::vector<cdouble> q(N), e(N + 1, cdouble(0.0));
  std::vector<cdouble> d(N + 1);
  d[0] = a[0];
  for (int i = 0; i < N; ++i) {
    if (a[i] == cdouble(0.0)) fail(ErrorKind::Convergence, "de Hoog: vanishing transform sample");
    q[i] = a[i + 1] / a[i];
  }
  for (int r = 1; r <= M; ++r) {
    const int top = N - 2 * r;
    std::vector<cdouble> en(top + 1);
    for (int i = 0; i <= top; ++i) en[i] = q[i + 1] - q[i] + e[i + 1];
    d[2 * r - 1] = -q[0];
    d[2 * r] = -en[0];
    if (r < M) {
      std::vector<cdouble> qn(top);
      for (int i = 0; i < top; ++i) {
        if (en[i] == cdouble(0.0)) fail(ErrorKind::Convergence, "de Hoog: quotient-difference breakdown");
        qn[i] = q[i + 1] * en[i + 1] / en[i];
      }
      q = std::move(qn);
    }
    e = std::move(en);
  }

  const cdouble z = std::polar(1.0, kPi * t / T);
  std::vector<cdouble> A(N + 2), B(N + 2);  // index n + 1 holds A_n
  A[0] = 0.0;
  B[0] = 1.0;
  A[1] = d[0];
  B[1] = 1.0;
  for (int n = 1; n <= N; ++n) {
    A[n + 1] = A[n] + d[n] * z * A[n - 1];
    B[n + 1] = B[n] + d[n] * z * B[n - 1];
  }
  const cdouble h = 0.5 * (1.0 + z * (d[N - 1] - d[N]));
  const cdouble R = -h * (1.0 - std::sqrt(1.0 + z * d[N] / (h * h)));
  const cdouble An = A[N + 1] + R * A[N];
  const cdouble Bn = B[N + 1] + R * B[N];

  const double factor = std::exp(gamma * t) / T;
  const double value = factor * (An / Bn).real();
  const double plain = factor * (A[N + 1] / B[N + 1]).real();
  const double lower = factor * (A[N - 1] / B[N - 1]).real();
  if (!std::isfinite(value)) fail(ErrorKind::Convergence, "de Hoog: non-finite result");
  // The damping abscissa bounds the aliasing error by about tolerance * |f|.
  return {value, std::max({std::abs(value - plain), std::abs(value - lower), c.tolerance * std::abs(value)})};
}

// Fixed Talbot contour s(theta) = r theta (cot theta + i), r = 2M / (5t).
double talbot_sum(const TransformFunction& F, double t, int M, double scale) {
  const double r = scale * 2.0 * M / (5.0 * t);
  double sum = 0.5 * (std::exp(r * t) * sample(F, cdouble(r, 0.0))).real();
  for (int k = 1; k < M; ++k) {
    const double theta = k * kPi / M;
    const double cot = 1.0 / std::tan(theta);
    const cdouble s(r * theta * cot, r * theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    sum += (std::exp(s * t) * sample(F, s) * cdouble(1.0, sigma)).real();
  }
  return r / M * sum;
}

InversionResult talbot(const TransformFunction& F, double t, const InversionConfig& c) {
  const double value = talbot_sum(F, t, c.terms, c.scale);
  const double coarse = talbot_sum(F, t, (3 * c.terms) / 4, c.scale);
  if (!std::isfinite(value)) fail(ErrorKind::Convergence, "Talbot: non-finite result");
  const double err = std::abs(value - coarse);
  // Singularities off the negative real axis (or a jump) defeat the contour;
  // the two orders then disagree well beyond the requested tolerance.
  if (err > std::sqrt(c.tolerance) * std::max(std::abs(value), 1.0))
    fail(ErrorKind::Convergence, "Talbot: no convergence, orders differ by " + std::to_string(err));
  return {value, err};
}

}  // namespace

void InversionConfig::validate() const {
  if (terms < 8 || terms > 200) fail(ErrorKind::Configuration, "inversion terms must lie in [8, 200]");
  if (!(tolerance >= 1e-14 && tolerance <= 1e-2))
    fail(ErrorKind::Configuration, "inversion tolerance must lie in [1e-14, 1e-2]");
  if (!(scale > 0.0) || !std::isfinite(scale)) fail(ErrorKind::Configuration, "inversion scale must be positive");
}

InversionResult inverse_laplace_detailed(const TransformFunction& F, double t, const InversionConfig& config) {
  config.validate();
  if (!(t > 0.0) || !std::isfinite(t)) fail(ErrorKind::Domain, "inverse Laplace transform needs t > 0");
  return config.algorithm == InversionAlgorithm::DeHoog ? dehoog(F, t, config) : talbot(F, t, config);
}

double inverse_laplace(const TransformFunction& F, double t, const InversionConfig& config) {
  return inverse_laplace_detailed(F, t, config).value;
}

}  // namespace viscowave::numerics
