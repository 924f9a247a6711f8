#pragma once

#include <cmath>
#include <complex>

namespace viscowave::specfun {

using cdouble = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243104215933593992;
inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// A function value paired with an absolute error estimate.
template <typename T>
struct SpecialValue {
  T value{};
  double abs_error_estimate = 0.0;
};

/// Confluent hypergeometric 1F1(a, b; x) for b in {1, 2}, -2 < a < 2, x <= 0.
///
/// |x| <= 30 always uses the Kummer-transformed series e^x 1F1(b-a, b; -x),
/// whose terms do not alternate. Beyond that the large-argument expansion
/// z^-a Gamma(b)/Gamma(b-a) sum (a)_n (1+a-b)_n / (n! z^n) is tried first and
/// accepted once its smallest term drops below 1e-15 of the sum, which
/// happens near |x| = 36 for the parameters used here. Arguments with
/// |x| > 700 always take the expansion.
SpecialValue<double> hyp1f1(double a, double b, double x);

/// The two branches of hyp1f1 exposed individually (x <= 0).
SpecialValue<double> hyp1f1_series(double a, double b, double x);
SpecialValue<double> hyp1f1_asymptotic(double a, double b, double x);

/// [1F1(-alpha, 1; -z) - 1] / alpha, continuous through alpha = 0 where it
/// equals Ein(z). Accurate near z = 0 where the naive difference cancels.
double kummer_increment(double alpha, double z);

/// Modified exponential integral Ein(x) = int_0^x (1 - e^-s)/s ds, x >= 0.
SpecialValue<double> ein(double x);

/// Exponential integral E1(x) for real x > 0.
double expint_e1(double x);

/// Generalized exponential integral E_nu(z) = int_1^inf e^{-zt} t^{-nu} dt,
/// real order and complex z off the closed negative real axis.
///
/// |z| < 1 and the neighbourhood of the negative real axis use the series
/// Gamma(1-nu) z^(nu-1) - sum (-z)^k / (k! (1-nu+k)); elsewhere the
/// continued fraction of Legendre type is used.
SpecialValue<cdouble> expint(double nu, cdouble z);

/// (1 - z e^z E_nu(z)) / nu, with the value e^z E_1(z) at nu = 0.
///
/// This is the combination entering the Carson transform of the
/// logarithmic/power creep law; the continued-fraction route isolates the
/// factor nu analytically so no division by a small nu occurs there.
cdouble expint_reduced(double nu, cdouble z);

/// e^z E_nu(z) without the exponential overflow of the plain product.
cdouble expint_scaled(double nu, cdouble z);

inline double log_gamma(double x) { return std::lgamma(x); }

/// log(1 + w) and exp(z) - 1 for complex arguments, accurate for small |w|, |z|.
cdouble log1p(cdouble w);
cdouble expm1(cdouble z);

}  // namespace viscowave::specfun
