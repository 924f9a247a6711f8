#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>

namespace viscowave::numerics {

using cdouble = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

struct ComplexQuadratureResult {
  cdouble value{};
  double abs_error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Endpoint behaviour of an integrand, used to pick a change of variables
/// that makes it regular before double-exponential quadrature.
struct SingularityHint {
  enum class Kind { None, LeftAlgebraic, RightAlgebraic, LeftLogSqrt };
  Kind kind = Kind::None;
  double exponent = 0.0;  // f ~ (x - a)^exponent or (b - x)^exponent, exponent > -1

  static SingularityHint none() { return {}; }
  static SingularityHint left_algebraic(double e) { return {Kind::LeftAlgebraic, e}; }
  static SingularityHint right_algebraic(double e) { return {Kind::RightAlgebraic, e}; }
  static SingularityHint left_log_sqrt() { return {Kind::LeftLogSqrt, 0.0}; }
};

struct QuadratureOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_level = 11;
};

using RealFunction = std::function<double(double)>;
using ComplexFunction = std::function<cdouble(double)>;

/// Integral of f over [a, b], b may be +infinity.
///
/// Finite intervals use tanh-sinh quadrature, half-infinite ones exp-sinh
/// with the abscissa scale |a| or 1. The hint introduces a power or
/// exponential substitution that removes the stated endpoint singularity.
QuadratureResult integrate(const RealFunction& f, double a, double b,
                           SingularityHint hint = SingularityHint::none(),
                           const QuadratureOptions& options = {});

ComplexQuadratureResult integrate_complex(const ComplexFunction& f, double a, double b,
                                          SingularityHint hint = SingularityHint::none(),
                                          const QuadratureOptions& options = {});

/// tanh-sinh on a finite interval. The integrand receives the abscissa
/// reconstructed from its distance to the nearer endpoint, so an endpoint
/// at 0 is resolved down to the smallest normal doubles.
QuadratureResult tanh_sinh(const RealFunction& f, double a, double b, const QuadratureOptions& options = {});

/// exp-sinh on [a, inf) with x = a + scale * exp(pi/2 sinh t).
QuadratureResult exp_sinh(const RealFunction& f, double a, double scale, const QuadratureOptions& options = {});

/// Globally adaptive 15-point Gauss-Kronrod for smooth integrands. Exact for
/// polynomials of degree <= 22 on a single panel.
QuadratureResult gauss_kronrod(const RealFunction& f, double a, double b, const QuadratureOptions& options = {});

ComplexQuadratureResult gauss_kronrod_complex(const ComplexFunction& f, double a, double b,
                                              const QuadratureOptions& options = {});

/// int_0^inf e^{-p t} f(t) dt for Re p > 0, summed over dyadic windows
/// [0, T), [T, 2T), [2T, 4T), ... with T = 1/|p|.
cdouble forward_laplace(const RealFunction& f, cdouble p);

// ---------------------------------------------------------------------------
// Inverse Laplace transform

enum class InversionAlgorithm { DeHoog, Talbot };

struct InversionConfig {
  InversionAlgorithm algorithm = InversionAlgorithm::DeHoog;
  int terms = 40;           // de Hoog: order M (2M+1 samples); Talbot: nodes
  double tolerance = 1e-12; // de Hoog: sets the contour abscissa
  double scale = 2.0;       // de Hoog: period T = scale * t; Talbot: contour radius factor

  static InversionConfig dehoog() { return {InversionAlgorithm::DeHoog, 40, 1e-12, 2.0}; }
  static InversionConfig talbot() { return {InversionAlgorithm::Talbot, 32, 1e-10, 1.0}; }

  /// Throws Configuration when any field is out of range.
  void validate() const;
};

using TransformFunction = std::function<cdouble(cdouble)>;

struct InversionResult {
  double value = 0.0;
  double error_estimate = 0.0;  // difference to the next-lower-order approximant
};

/// f(t) from its Laplace transform F(p). F must be analytic for Re p > 0.
/// Talbot additionally samples F in the left half-plane away from the
/// negative real axis.
double inverse_laplace(const TransformFunction& F, double t, const InversionConfig& config = InversionConfig::dehoog());

InversionResult inverse_laplace_detailed(const TransformFunction& F, double t,
                                         const InversionConfig& config = InversionConfig::dehoog());

}  // namespace viscowave::numerics
