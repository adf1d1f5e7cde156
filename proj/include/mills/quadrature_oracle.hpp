#pragma once

// Independent route to the Mills ratio for Re z > 0: integrating Phi-bar
// along the hyperbola uv = xy from z to +infinity splits r(z) into two real
// integrals, r(z) = A(z) - i B(z), with
//
//   A = int_x^inf e^{a(u) - a(x)} du,   B = int_0^y e^{a(y) - a(v)} dv,
//   a(u) = x^2 y^2 / (2 u^2) - u^2 / 2.
//
// Both integrands are positive and bounded by 1, and are integrated here
// directly with adaptive Gauss-Kronrod on geometrically growing panels that
// start at the integrand's maximum. Nothing in this header calls the series
// or continued-fraction code in gaussian_core.hpp.

#include "mills/errors.hpp"
#include "mills/gaussian_core.hpp"
#include "mills/numeric.hpp"

#include <cmath>

namespace mills {

/// a_{xy}(u) = x^2 y^2/(2u^2) - u^2/2, the phase along the hyperbolic contour.
class PhaseFunction {
 public:
  PhaseFunction(double x, double y) : x_(x), y_(y) {
    if (!(x > 0.0) || !std::isfinite(x) || !std::isfinite(y))
      throw domain_error("PhaseFunction: need finite x > 0");
  }
  double x() const { return x_; }
  double y() const { return y_; }
  double operator()(double u) const {
    const double xy = x_ * y_;
    return 0.5 * xy * xy / (u * u) - 0.5 * u * u;
  }

 private:
  double x_;
  double y_;
};

inline double phase(const PhaseFunction& p, double u) {
  if (!(u > 0.0)) throw domain_error("phase: need u > 0");
  return p(u);
}

namespace detail {

inline constexpr double oracle_rel_tol = 1e-13;
inline constexpr double oracle_tail_fraction = 1e-17;
inline constexpr double oracle_v_floor = 1e-30;
inline constexpr int oracle_max_panels = 400;

inline void require_positive_real_part(const HalfPlanePoint& z, const char* what) {
  if (!(z.x() > 0.0)) throw domain_error(std::string(what) + ": the A - iB representation needs Re z > 0");
}

}  // namespace detail

/// A(z) with its quadrature error estimate. Only |Im z| enters.
inline QuadratureResult A_integral_with_error(const HalfPlanePoint& z) {
  detail::require_positive_real_part(z, "A_integral");
  const double x = z.x(), y = std::abs(z.y());
  const double y2 = y * y;
  // a(u) - a(x) = -(u^2 - x^2)/2 * (1 + y^2/u^2), written to avoid cancellation
  auto integrand = [=](double u) { return std::exp(-0.5 * (u - x) * (u + x) * (1.0 + y2 / (u * u))); };

  // e-folding length at u = x is 1/(x + y^2/x); for u >= a the integrand
  // decays at least like e^{-(u^2 - a^2)/2}, so the tail past a is below
  // integrand(a) * min(sqrt(pi/2), 1/a).
  double width = 1.0 / (x + y2 / x);
  double a = x;
  QuadratureResult total;
  for (int panel = 0; panel < detail::oracle_max_panels; ++panel) {
    const QuadratureResult q = integrate(integrand, a, a + width, detail::oracle_rel_tol);
    total.value += q.value;
    total.error += q.error;
    a += width;
    width *= 2.0;
    const double tail = integrand(a) * std::min(sqrt_pi_over_2, 1.0 / a);
    if (tail < detail::oracle_tail_fraction * total.value) {
      total.error += tail;
      return total;
    }
  }
  throw accuracy_error("A_integral: tail did not become negligible");
}

/// B(z) with its quadrature error estimate; odd in Im z.
inline QuadratureResult B_integral_with_error(const HalfPlanePoint& z) {
  detail::require_positive_real_part(z, "B_integral");
  if (z.y() == 0.0) return {};
  const double x = z.x(), y = std::abs(z.y());
  const double x2 = x * x;
  // a(y) - a(v) = -(y^2 - v^2)/2 * (1 + x^2/v^2); increasing in v, equal to 0 at v = y
  auto integrand = [=](double v) { return std::exp(-0.5 * (y - v) * (y + v) * (1.0 + x2 / (v * v))); };

  double width = 1.0 / (y + x2 / y);
  double b = y;
  QuadratureResult total;
  for (int panel = 0; panel < detail::oracle_max_panels; ++panel) {
    const double a = std::max(b - width, detail::oracle_v_floor);
    const QuadratureResult q = integrate(integrand, a, b, detail::oracle_rel_tol);
    total.value += q.value;
    total.error += q.error;
    b = a;
    width *= 2.0;
    // integrand is increasing, so what is left on (0, b) is below b * integrand(b)
    const double rest = b * integrand(b);
    if (b <= detail::oracle_v_floor || rest < detail::oracle_tail_fraction * total.value) {
      total.error += rest;
      break;
    }
  }
  if (z.y() < 0.0) total.value = -total.value;
  return total;
}

inline double A_integral(const HalfPlanePoint& z) { return A_integral_with_error(z).value; }
inline double B_integral(const HalfPlanePoint& z) { return B_integral_with_error(z).value; }

/// r(z) = A(z) - i B(z) for Re z > 0, by quadrature.
inline Evaluation mills_ratio_AB(const HalfPlanePoint& z) {
  const QuadratureResult a = A_integral_with_error(z);
  const QuadratureResult b = B_integral_with_error(z);
  return {{a.value, -b.value}, a.error + b.error, Method::quadrature};
}

}  // namespace mills
