#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <sstream>
#include <vector>

#include "viscowave/error.hpp"
#include "viscowave/numerics.hpp"

namespace viscowave::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHalfPi = 1.57079632679489661923132169163975144;
constexpr double kTMax = 6.5;
// A result is rejected only when its error estimate exceeds the requested
// tolerance by this factor after the refinement budget is exhausted.
constexpr double kFailureSlack = 100.0;

template <typename T>
struct Result {
  T value{};
  double err = 0.0;
  std::size_t evals = 0;
};

template <typename T>
bool finite(const T& v) {
  if constexpr (std::is_same_v<T, double>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

template <typename T>
T checked_eval(const std::function<T(double)>& f, double x) {
  const T v = f(x);
  if (!finite(v)) {
    std::ostringstream os;
    os.precision(17);
    os << "integrand is not finite at x = " << x;
    fail(ErrorKind::Domain, os.str());
  }
  return v;
}

double tolerance_for(double magnitude, const QuadratureOptions& o) {
  return std::max(o.abs_tol, o.rel_tol * magnitude);
}

template <typename T>
void check_budget(const Result<T>& r, const QuadratureOptions& o, const char* who) {
  if (r.err > kFailureSlack * tolerance_for(std::abs(r.value), o)) {
    std::ostringstream os;
    os << who << ": no convergence, error estimate " << r.err;
    fail(ErrorKind::Convergence, os.str());
  }
}

// Generic double-exponential driver. `node(t, term)` stores weight * f(x(t))
// and returns false once the abscissa or weight underflows.
template <typename T, typename Node>
Result<T> double_exponential(Node&& node, const QuadratureOptions& o, bool right_can_stop) {
  Result<T> res;
  double scale_mag = 0.0;
  double abs_total = 0.0;

  auto sweep = [&](double h, int first, int stride, T& acc) {
    for (int sign : {-1, 1}) {
      for (int j = first;; j += stride) {
        const double t = sign * j * h;
        if (std::abs(t) > kTMax) break;
        T term{};
        if (!node(t, term)) break;
        ++res.evals;
        acc += term;
        abs_total += std::abs(term);
        const double mag = std::abs(term);
        if (std::abs(t) > 3.0 && mag <= 1e-6 * kEps * scale_mag && (sign < 0 || right_can_stop)) break;
      }
    }
  };

  double h = 1.0;
  T sum{};
  {
    T centre{};
    if (node(0.0, centre)) {
      ++res.evals;
      sum += centre;
      abs_total += std::abs(centre);
    }
    scale_mag = std::abs(centre);
    T rest{};
    sweep(h, 1, 1, rest);
    sum += rest;
    scale_mag = std::max(scale_mag, std::abs(sum));
  }
  T estimate = h * sum;
  for (int level = 1; level <= o.max_level; ++level) {
    h *= 0.5;
    T fresh{};
    sweep(h, 1, 2, fresh);
    sum += fresh;
    const T next = h * sum;
    const double diff = std::abs(next - estimate);
    estimate = next;
    scale_mag = std::max(scale_mag, std::abs(sum));
    res.err = std::max(diff, 4.0 * kEps * h * abs_total);
    if (level >= 3 && diff <= tolerance_for(std::abs(estimate), o)) break;
  }
  res.value = estimate;
  return res;
}

template <typename T>
Result<T> tanh_sinh_t(const std::function<T(double)>& f, double a, double b, const QuadratureOptions& o) {
  if (!(a < b)) fail(ErrorKind::Precondition, "tanh_sinh: need a < b");
  const double half = 0.5 * (b - a);
  auto node = [&](double t, T& term) {
    const double u = kHalfPi * std::sinh(t);
    const double cu = std::cosh(u);
    const double w = half * kHalfPi * std::cosh(t) / (cu * cu);
    if (t == 0.0) {
      term = w * checked_eval(f, a + half);
      return true;
    }
    const double d = half * std::exp(-std::abs(u)) / cu;
    if (!(d > 0.0) || !(w > 0.0)) return false;
    const double x = (t < 0.0) ? a + d : b - d;
    if (x <= a || x >= b) return false;
    term = w * checked_eval(f, x);
    return true;
  };
  auto r = double_exponential<T>(node, o, true);
  check_budget(r, o, "tanh_sinh");
  return r;
}

template <typename T>
Result<T> exp_sinh_t(const std::function<T(double)>& f, double a, double scale, const QuadratureOptions& o) {
  if (!(scale > 0.0)) fail(ErrorKind::Precondition, "exp_sinh: scale must be positive");
  auto node = [&](double t, T& term) {
    const double u = kHalfPi * std::sinh(t);
    const double e = std::exp(u);
    const double d = scale * e;
    if (!(d > 0.0) || !std::isfinite(d)) return false;
    const double x = a + d;
    if (x <= a || !std::isfinite(x)) return false;
    const double w = d * kHalfPi * std::cosh(t);
    if (!std::isfinite(w)) return false;
    term = w * checked_eval(f, x);
    return true;
  };
  auto r = double_exponential<T>(node, o, true);
  check_budget(r, o, "exp_sinh");
  return r;
}

// Gauss-Kronrod 7/15 nodes and weights.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct Panel {
  double a, b;
  T value;
  double err;
  bool operator<(const Panel& other) const { return err < other.err; }
};

template <typename T>
Panel<T> gk15_panel(const std::function<T(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<T, 15> fv;
  fv[7] = checked_eval(f, c);
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    fv[j] = checked_eval(f, c - dx);
    fv[14 - j] = checked_eval(f, c + dx);
  }
  T kronrod = fv[7] * kWgk[7];
  T gauss = fv[7] * kWg[3];
  for (int j = 0; j < 7; ++j) {
    kronrod += kWgk[j] * (fv[j] + fv[14 - j]);
    if (j % 2 == 1) gauss += kWg[j / 2] * (fv[j] + fv[14 - j]);
  }
  const T mean = 0.5 * kronrod;
  double asc = kWgk[7] * std::abs(fv[7] - mean);
  for (int j = 0; j < 7; ++j) asc += kWgk[j] * (std::abs(fv[j] - mean) + std::abs(fv[14 - j] - mean));
  kronrod *= h;
  gauss *= h;
  asc *= std::abs(h);
  // QUADPACK scaling: |K - G| overstates the Kronrod error for smooth integrands.
  double err = std::abs(kronrod - gauss);
  if (asc > 0.0 && err > 0.0) err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  return {a, b, kronrod, err};
}

template <typename T>
Result<T> gauss_kronrod_t(const std::function<T(double)>& f, double a, double b, const QuadratureOptions& o) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    fail(ErrorKind::Precondition, "gauss_kronrod: need finite a < b");
  std::priority_queue<Panel<T>> panels;
  panels.push(gk15_panel(f, a, b));
  Result<T> res;
  res.evals = 15;
  T total = panels.top().value;
  double err = panels.top().err;
  double magnitude = std::abs(total);  // sum of |panel value|, sets the rounding floor
  auto target = [&] { return std::max(tolerance_for(std::abs(total), o), 10.0 * kEps * magnitude); };
  for (int iter = 0; iter < 4000 && err > target(); ++iter) {
    const Panel<T> worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      panels.push(worst);
      break;
    }
    const auto left = gk15_panel(f, worst.a, mid);
    const auto right = gk15_panel(f, mid, worst.b);
    res.evals += 30;
    total += left.value + right.value - worst.value;
    err += left.err + right.err - worst.err;
    magnitude += std::abs(left.value) + std::abs(right.value) - std::abs(worst.value);
    panels.push(left);
    panels.push(right);
  }
  // Recompute from the panels to shed accumulated cancellation.
  T sum{};
  double esum = 0.0;
  double msum = 0.0;
  while (!panels.empty()) {
    sum += panels.top().value;
    esum += panels.top().err;
    msum += std::abs(panels.top().value);
    panels.pop();
  }
  res.value = sum;
  res.err = std::max(esum, 10.0 * kEps * msum);
  if (esum > kFailureSlack * std::max(tolerance_for(std::abs(sum), o), 10.0 * kEps * msum)) {
    std::ostringstream os;
    os << "gauss_kronrod: no convergence, error estimate " << esum;
    fail(ErrorKind::Convergence, os.str());
  }
  return res;
}

template <typename T>
Result<T> integrate_t(const std::function<T(double)>& f, double a, double b, SingularityHint hint,
                      const QuadratureOptions& o) {
  if (!(a < b)) fail(ErrorKind::Precondition, "integrate: need a < b");
  if (!std::isfinite(a)) fail(ErrorKind::Precondition, "integrate: lower limit must be finite");
  const bool infinite = std::isinf(b);
  const double natural_scale = (a == 0.0) ? 1.0 : std::abs(a);

  using Kind = SingularityHint::Kind;
  switch (hint.kind) {
    case Kind::None: {
      if (infinite) return exp_sinh_t<T>(f, a, natural_scale, o);
      try {
        return tanh_sinh_t<T>(f, a, b, o);
      } catch (const Error& e) {
        // Interior kinks stall tanh-sinh; adaptive bisection localizes them.
        if (e.kind() != ErrorKind::Convergence) throw;
        return gauss_kronrod_t<T>(f, a, b, o);
      }
    }

    case Kind::LeftAlgebraic:
    case Kind::RightAlgebraic: {
      if (!(hint.exponent > -1.0)) fail(ErrorKind::Precondition, "integrate: exponent must exceed -1");
      const double m = 1.0 / (1.0 + hint.exponent);
      if (hint.kind == Kind::RightAlgebraic && infinite)
        fail(ErrorKind::Precondition, "integrate: right singularity needs a finite upper limit");
      if (infinite) {
        std::function<T(double)> g = [&](double s) {
          const double x = a + std::pow(s, m);
          const double offset = x - a;  // the distance actually sampled
          if (offset == 0.0) return T{};  // abscissa collapsed onto the singular endpoint
          return f(x) * (m * std::pow(offset, 1.0 - 1.0 / m));
        };
        return exp_sinh_t<T>(g, 0.0, 1.0, o);
      }
      const double len = b - a;
      const bool left = hint.kind == Kind::LeftAlgebraic;
      std::function<T(double)> g = [&, left](double s) {
        double x = left ? a + len * std::pow(s, m) : b - len * std::pow(s, m);
        // Rounding moves x; the Jacobian uses the distance actually sampled,
        // which keeps g smooth in s right up to the endpoint.
        double offset = left ? x - a : b - x;
        if (offset == 0.0) {
          // Collapsed onto the endpoint: g is smooth in s, so sample the
          // nearest representable interior point instead of dropping the node.
          x = left ? std::nextafter(a, b) : std::nextafter(b, a);
          offset = left ? x - a : b - x;
        }
        return f(x) * (len * m * std::pow(offset / len, 1.0 - 1.0 / m));
      };
      return tanh_sinh_t<T>(g, 0.0, 1.0, o);
    }

    case Kind::LeftLogSqrt: {
      const double len = infinite ? 1.0 : b - a;
      std::function<T(double)> g = [&](double s) {
        const double d = len * std::exp(-s);
        if (a + d == a) return T{};
        return f(a + d) * d;
      };
      auto head = exp_sinh_t<T>(g, 0.0, 1.0, o);
      if (!infinite) return head;
      auto tail = exp_sinh_t<T>(f, a + 1.0, natural_scale, o);
      return {head.value + tail.value, head.err + tail.err, head.evals + tail.evals};
    }
  }
  fail(ErrorKind::Precondition, "integrate: unknown hint");
}

QuadratureResult to_public(const Result<double>& r) { return {r.value, r.err, r.evals}; }
ComplexQuadratureResult to_public(const Result<cdouble>& r) { return {r.value, r.err, r.evals}; }

}  // namespace

QuadratureResult integrate(const RealFunction& f, double a, double b, SingularityHint hint,
                           const QuadratureOptions& options) {
  return to_public(integrate_t<double>(f, a, b, hint, options));
}

ComplexQuadratureResult integrate_complex(const ComplexFunction& f, double a, double b, SingularityHint hint,
                                          const QuadratureOptions& options) {
  return to_public(integrate_t<cdouble>(f, a, b, hint, options));
}

QuadratureResult tanh_sinh(const RealFunction& f, double a, double b, const QuadratureOptions& options) {
  return to_public(tanh_sinh_t<double>(f, a, b, options));
}

QuadratureResult exp_sinh(const RealFunction& f, double a, double scale, const QuadratureOptions& options) {
  return to_public(exp_sinh_t<double>(f, a, scale, options));
}

QuadratureResult gauss_kronrod(const RealFunction& f, double a, double b, const QuadratureOptions& options) {
  return to_public(gauss_kronrod_t<double>(f, a, b, options));
}

ComplexQuadratureResult gauss_kronrod_complex(const ComplexFunction& f, double a, double b,
                                              const QuadratureOptions& options) {
  return to_public(gauss_kronrod_t<cdouble>(f, a, b, options));
}

cdouble forward_laplace(const RealFunction& f, cdouble p) {
  if (!(p.real() > 0.0)) fail(ErrorKind::Domain, "forward_laplace: Re p must be positive");
  const double window = 1.0 / std::abs(p);
  QuadratureOptions o;
  o.rel_tol = 1e-13;
  o.abs_tol = 0.0;

  ComplexFunction integrand = [&](double t) { return std::exp(-p * t) * f(t); };
  cdouble sum = tanh_sinh_t<cdouble>(integrand, 0.0, window, o).value;
  double lo = window;
  int quiet = 0;
  for (int k = 0; k < 400; ++k) {
    const double hi = 2.0 * lo;
    QuadratureOptions wo = o;
    wo.abs_tol = 1e-17 * std::abs(sum);
    const cdouble piece = gauss_kronrod_t<cdouble>(integrand, lo, hi, wo).value;
    sum += piece;
    lo = hi;
    if (std::abs(piece) <= 1e-17 * std::abs(sum) && p.real() * lo > 40.0) {
      if (++quiet >= 2) return sum;
    } else {
      quiet = 0;
    }
  }
  fail(ErrorKind::Convergence, "forward_laplace: transform integral did not settle");
}

}  // namespace viscowave::numerics
