#pragma once

// Closed-form envelopes on H+:
//   0.686... < |S(z)| < 1                         (z != 0, +-iy*)
//   |R(z)| < |z + sqrt(2/pi)|                     (z != 0)
//   |R^(n)(z)| <= n!/x^n sqrt(|z + sqrt(2/pi)|^2 + x^2)   (x = Re z > 0)
// and the elliptic integral J(a, b) = int_0^{2pi} sqrt(a + b cos t) dt that
// links the last bound to the second.

#include "mills/constants.hpp"
#include "mills/errors.hpp"
#include "mills/gaussian_core.hpp"
#include "mills/numeric.hpp"

#include <cmath>
#include <string>

namespace mills {

// Certified lower bracket for min |S(iy)|; pass/fail decisions use this, not a computed minimum.
inline constexpr double band_floor = 0.6861;

struct BoundReport {
  HalfPlanePoint point;
  double quantity = 0.0;
  double envelope = 0.0;
  double margin = 0.0;      // envelope - quantity (for the band: distance to the nearer edge)
  bool passed = false;
  bool boundary_case = false;  // equality is attained here, so the check is margin >= -tolerance
  double tolerance = 0.0;
};

/// Checks band_floor < |S(z)| < 1. At z = 0 the upper edge is attained and the
/// report is a boundary case.
inline BoundReport s_band_check(const HalfPlanePoint& z, double floor = band_floor) {
  const double mod = std::abs(S(z).value);
  BoundReport rep{z, mod, 1.0};
  rep.margin = std::min(1.0 - mod, mod - floor);
  if (z.is_origin()) {
    rep.boundary_case = true;
    rep.passed = rep.margin >= -rep.tolerance;
  } else {
    rep.passed = rep.margin > 0.0;
  }
  return rep;
}

/// Checks |R(z)| < |z + sqrt(2/pi)|; equality at z = 0.
inline BoundReport r_envelope_check(const HalfPlanePoint& z) {
  const double quantity = std::abs(inverse_mills(z).value);
  const double envelope = std::abs(complex(z.x() + sqrt_2_over_pi, z.y()));
  BoundReport rep{z, quantity, envelope, envelope - quantity};
  if (z.is_origin()) {
    rep.boundary_case = true;
    rep.passed = rep.margin >= -rep.tolerance;
  } else {
    rep.passed = rep.margin > 0.0;
  }
  return rep;
}

namespace detail {

inline void require_derivative_args(int n, const HalfPlanePoint& z, const char* what) {
  if (n < 1) throw domain_error(std::string(what) + ": need n >= 1");
  if (!(z.x() > 0.0)) throw domain_error(std::string(what) + ": need Re z > 0");
}

}  // namespace detail

/// log of n!/x^n sqrt(|z + sqrt(2/pi)|^2 + x^2); usable for any n.
inline double log_derivative_bound(int n, const HalfPlanePoint& z) {
  detail::require_derivative_args(n, z, "log_derivative_bound");
  const double x = z.x();
  const double m2 = std::norm(complex(x + sqrt_2_over_pi, z.y()));
  return std::lgamma(n + 1.0) - n * std::log(x) + 0.5 * std::log(m2 + x * x);
}

/// R^(n)_max(z) = n!/x^n sqrt(|z + sqrt(2/pi)|^2 + x^2). Throws overflow_error
/// when the value leaves double range; log_derivative_bound is always finite.
inline double derivative_bound(int n, const HalfPlanePoint& z) {
  detail::require_derivative_args(n, z, "derivative_bound");
  const double x = z.x();
  const double m2 = std::norm(complex(x + sqrt_2_over_pi, z.y()));
  double value;
  if (n <= 170) {
    double ratio = 1.0;  // n!/x^n, accumulated as a product of k/x to delay overflow
    for (int k = 1; k <= n; ++k) ratio *= k / x;
    value = ratio * std::sqrt(m2 + x * x);
  } else {
    value = std::exp(log_derivative_bound(n, z));
  }
  if (!std::isfinite(value)) throw overflow_error("derivative_bound: value overflows; use log_derivative_bound");
  return value;
}

struct EllipticParams {
  double a;
  double b;
  double theta;
};

/// a = |z + sqrt(2/pi)|^2 + x^2, b = 2x|z + sqrt(2/pi)|, theta = arctan(y/(x + sqrt(2/pi))).
inline EllipticParams elliptic_params(const HalfPlanePoint& z) {
  if (!(z.x() > 0.0)) throw domain_error("elliptic_params: need Re z > 0");
  const double x = z.x();
  const double m = std::abs(complex(x + sqrt_2_over_pi, z.y()));
  return {m * m + x * x, 2.0 * x * m, std::atan2(z.y(), x + sqrt_2_over_pi)};
}

/// J(a, b) = int_0^{2pi} sqrt(a + b cos t) dt for a > 0, 0 <= b <= a.
inline double J(double a, double b) {
  if (!(a > 0.0) || !(b >= 0.0) || b > a || !std::isfinite(a))
    throw domain_error("J: need a > 0 and 0 <= b <= a");
  // a + b cos t = (a - b) + 2b cos^2(t/2): nonnegative without rounding, and
  // smooth on [0, pi] even when a = b.
  const double gap = a - b;
  auto integrand = [=](double t) {
    const double c = std::cos(0.5 * t);
    return std::sqrt(gap + 2.0 * b * c * c);
  };
  return 2.0 * integrate(integrand, 0.0, pi, 1e-14).value;
}

}  // namespace mills
