#pragma once

// Standard normal density phi, tail Phi-bar, Mills ratio r = Phi-bar/phi and
// inverse Mills ratio R = phi/Phi-bar on the closed right half-plane
// H+ = {z : Re z >= 0}, plus the normalization S(z) = R(z)/(z + sqrt(2/pi))
// and the imaginary-axis helpers (rescaled Dawson function, E(y)).
//
// Everything is built on the Mills ratio r, which is bounded on H+ and never
// overflows. phi and Phi-bar are recovered from r only when asked for, and
// raise mills::overflow_error when the unscaled value leaves double range.
//
// Evaluation regions for r(z), after reducing to Im z >= 0 by conjugation:
//   z = 0               exact sqrt(pi/2)
//   Re z = 0            r(iy) = sqrt(pi/2) e^{-y^2/2} - i tr(y)
//   |z| <= 1            Maclaurin series  sqrt(pi/2) e^{z^2/2} - sum z^{2k+1}/(2k+1)!!
//   Re z < 2, |z| < 10  Taylor step in x from iy, derivatives from r' = z r - 1
//   otherwise           Laplace continued fraction 1/(z + 1/(z + 2/(z + ...)))

#include "mills/constants.hpp"
#include "mills/errors.hpp"
#include "mills/numeric.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <string_view>

namespace mills {

using complex = std::complex<double>;

inline constexpr double eps = std::numeric_limits<double>::epsilon();

/// A point z = x + iy of the closed right half-plane.
class HalfPlanePoint {
 public:
  HalfPlanePoint(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y))
      throw domain_error("HalfPlanePoint: coordinates must be finite");
    if (x < 0.0)
      throw domain_error("HalfPlanePoint: Re z must be >= 0, got " + std::to_string(x));
    if (x == 0.0) x_ = 0.0;  // fold -0.0
  }
  explicit HalfPlanePoint(complex z) : HalfPlanePoint(z.real(), z.imag()) {}

  double x() const { return x_; }
  double y() const { return y_; }
  complex z() const { return {x_, y_}; }
  HalfPlanePoint conj() const { return {x_, -y_}; }
  bool is_origin() const { return x_ == 0.0 && y_ == 0.0; }

 private:
  double x_;
  double y_;
};

enum class Method { taylor, continued_fraction, quadrature, scaled_imaginary_axis };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::taylor: return "taylor";
    case Method::continued_fraction: return "continued_fraction";
    case Method::quadrature: return "quadrature";
    case Method::scaled_imaginary_axis: return "scaled_imaginary_axis";
  }
  return "unknown";
}

struct Evaluation {
  complex value;
  double abs_error_estimate = 0.0;
  Method method = Method::taylor;
};

namespace detail {

inline Evaluation conjugated(Evaluation e) {
  e.value = std::conj(e.value);
  return e;
}

// -z^2/2 = (y^2 - x^2)/2 - i x y, with the real part carried as an unevaluated
// sum hi + lo so that exp() of it keeps full relative accuracy.
struct HalfSquareExponent {
  double re_hi;
  double re_lo;
  double im_hi;
  double im_lo;
};

inline HalfSquareExponent neg_half_square(complex z) {
  const double x = z.real(), y = z.imag();
  const double sy = y * y, ty = std::fma(y, y, -sy);
  const double sx = x * x, tx = std::fma(x, x, -sx);
  // two-sum of sy - sx
  const double s = sy - sx;
  const double bb = s - sy;
  const double e = (sy - (s - bb)) + (-sx - bb);
  const double p = x * y, pe = std::fma(x, y, -p);
  return {0.5 * s, 0.5 * (e + ty - tx), -p, -pe};
}

}  // namespace detail

/// phi(z) = e^{-z^2/2}/sqrt(2 pi). Throws overflow_error when |phi(z)| exceeds double range.
inline complex phi(complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw domain_error("phi: non-finite argument");
  const auto ex = detail::neg_half_square(z);
  const double mag = std::exp(ex.re_hi) * (1.0 + ex.re_lo) * inv_sqrt_2pi;
  if (!std::isfinite(mag)) throw overflow_error("phi: |phi(z)| overflows; use phi_log");
  const complex rot = std::polar(1.0, ex.im_hi) * complex(1.0, ex.im_lo);
  if (z.imag() == 0.0) return {mag, 0.0};
  return mag * rot;
}

struct LogPhi {
  double log_magnitude;
  double phase;
};

/// Overflow-free representation phi(z) = exp(log_magnitude) e^{i phase}; the phase is -Re z Im z, unreduced.
inline LogPhi phi_log(complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw domain_error("phi_log: non-finite argument");
  const auto ex = detail::neg_half_square(z);
  return {(ex.re_hi - log_sqrt_2pi) + ex.re_lo, ex.im_hi + ex.im_lo};
}

namespace detail {

// sum_{k>=0} y^{2k+1}/(2^k k! (2k+1)) = int_0^y e^{u^2/2} du, all terms positive.
inline double half_gauss_integral_series(double y) {
  const double y2 = y * y;
  double a = y;
  double sum = y;
  for (int k = 1; k < 2000; ++k) {
    a *= y2 / (2.0 * k);
    const double t = a / (2.0 * k + 1.0);
    sum += t;
    if (t < 0.25 * eps * sum && 2.0 * k > y2) break;
  }
  return sum;
}

inline constexpr double dawson_asymptotic_threshold = 10.0;

// tr(y) ~ sum_k (2k-1)!!/y^{2k+1}; at y >= 10 the truncation error is below e^{-50} relative.
inline double dawson_asymptotic(double y) {
  const double inv_y2 = 1.0 / (y * y);
  double t = 1.0 / y;
  double sum = t;
  for (int k = 1; k < 200; ++k) {
    t *= (2.0 * k - 1.0) * inv_y2;
    sum += t;
    if (t < 0.25 * eps * sum) break;
  }
  return sum;
}

}  // namespace detail

/// Rescaled Dawson function tr(y) = e^{-y^2/2} int_0^y e^{u^2/2} du, y >= 0.
inline double dawson_rescaled(double y) {
  if (!std::isfinite(y) || y < 0.0) throw domain_error("dawson_rescaled: need finite y >= 0");
  if (y == 0.0) return 0.0;
  if (y >= detail::dawson_asymptotic_threshold) return detail::dawson_asymptotic(y);
  return exp_neg_half_square(y) * detail::half_gauss_integral_series(y);
}

/// E(y) = int_0^y phi(iv) dv. Throws overflow_error for y > y_overflow.
inline double E(double y) {
  if (!std::isfinite(y) || y < 0.0) throw domain_error("E: need finite y >= 0");
  if (y > y_overflow) throw overflow_error("E: e^{y^2/2} overflows for y > y_overflow; use E_scaled");
  if (y < detail::dawson_asymptotic_threshold) return detail::half_gauss_integral_series(y) * inv_sqrt_2pi;
  const auto ex = detail::neg_half_square(complex(0.0, y));
  return std::exp(ex.re_hi) * (1.0 + ex.re_lo) * dawson_rescaled(y) * inv_sqrt_2pi;
}

/// e^{-y^2/2} E(y) = tr(y)/sqrt(2 pi); never overflows.
inline double E_scaled(double y) { return dawson_rescaled(y) * inv_sqrt_2pi; }

namespace detail {

// r(iy) for y >= 0: Phi-bar(iy) = 1/2 - i E(y) divided by phi(iy) = e^{y^2/2}/sqrt(2 pi).
inline Evaluation mills_ratio_axis(double y) {
  const double re = sqrt_pi_over_2 * exp_neg_half_square(y);
  const double im = -dawson_rescaled(y);
  // the positive-term series loses up to about y^2/4 ulps below the asymptotic threshold
  const double ulps = y < dawson_asymptotic_threshold ? 8.0 + 0.25 * y * y : 8.0;
  return {{re, im}, ulps * eps * std::hypot(re, im), Method::scaled_imaginary_axis};
}

inline Evaluation mills_ratio_maclaurin(complex z) {
  const complex z2 = z * z;
  const complex lead = sqrt_pi_over_2 * std::exp(0.5 * z2);
  complex d = z;
  complex sum = z;
  double abs_sum = std::abs(z);
  double last = abs_sum;
  for (int k = 1; k < 200; ++k) {
    d *= z2 / (2.0 * k + 1.0);
    sum += d;
    last = std::abs(d);
    abs_sum += last;
    if (last < 0.25 * eps * std::abs(sum)) break;
  }
  const complex r = lead - sum;
  return {r, last + 2.0 * eps * (std::abs(lead) + abs_sum), Method::taylor};
}

// Taylor expansion of r around iy in the real direction. The k-th derivative
// obeys r^{(k+1)} = z0 r^{(k)} + k r^{(k-1)}; the scaled terms
// t_k = r^{(k)}(z0) x^k / k! satisfy t_{k+1} = (z0 x t_k + x^2 t_{k-1})/(k+1).
// Perturbations of the starting value grow like e^{x^2/2}, so this is stable for x < 2.
inline Evaluation mills_ratio_axis_step(double x, double y) {
  const Evaluation base = mills_ratio_axis(y);
  const complex z0(0.0, y);
  const complex zh = z0 * x;
  const double h2 = x * x;
  complex prev = base.value;
  complex cur = (z0 * base.value - 1.0) * x;
  complex sum = prev + cur;
  const double min_terms = std::exp(1.0) * std::abs(zh) + 4.0;
  double last = std::abs(cur);
  for (int k = 1; k < 1000; ++k) {
    const complex next = (zh * cur + h2 * prev) / double(k + 1);
    sum += next;
    prev = cur;
    cur = next;
    last = std::abs(next);
    if (k > min_terms && last + std::abs(prev) < 0.25 * eps * std::abs(sum)) break;
  }
  const double growth = std::exp(0.5 * h2);
  const double err = last + growth * (base.abs_error_estimate + 4.0 * eps * (1.0 + 0.25 * std::abs(zh)) * std::abs(sum));
  return {sum, err, Method::scaled_imaginary_axis};
}

inline constexpr int cf_max_levels = 200;
inline constexpr double cf_tolerance = 1e-15;

// Modified Lentz evaluation of z + 1/(z + 2/(z + 3/(z + ...))); r is its reciprocal.
inline Evaluation mills_ratio_continued_fraction(complex z) {
  constexpr double tiny = 1e-300;
  complex f = z;
  complex C = z;
  complex D = 0.0;
  double delta_mag = 1.0;
  for (int k = 1; k <= cf_max_levels; ++k) {
    D = z + double(k) * D;
    if (D == 0.0) D = tiny;
    C = z + double(k) / C;
    if (C == 0.0) C = tiny;
    D = 1.0 / D;
    const complex delta = C * D;
    f *= delta;
    delta_mag = std::abs(delta - 1.0);
    if (delta_mag < cf_tolerance) {
      const complex r = 1.0 / f;
      return {r, std::abs(r) * (8.0 * delta_mag + 8.0 * eps), Method::continued_fraction};
    }
  }
  throw accuracy_error("mills_ratio: continued fraction did not converge within " +
                       std::to_string(cf_max_levels) + " levels");
}

// r(z) for x >= 0, y >= 0.
inline Evaluation mills_ratio_upper(double x, double y) {
  if (x == 0.0 && y == 0.0) return {{sqrt_pi_over_2, 0.0}, eps * sqrt_pi_over_2, Method::taylor};
  if (x == 0.0) return mills_ratio_axis(y);
  const double mod = std::hypot(x, y);
  if (mod <= 1.0) return mills_ratio_maclaurin({x, y});
  if (x < 2.0 && mod < 10.0) return mills_ratio_axis_step(x, y);
  return mills_ratio_continued_fraction({x, y});
}

}  // namespace detail

/// Mills ratio r(z) = Phi-bar(z)/phi(z); bounded on H+, never overflows.
inline Evaluation mills_ratio(const HalfPlanePoint& p) {
  Evaluation e = detail::mills_ratio_upper(p.x(), std::abs(p.y()));
  if (p.y() < 0.0) e = detail::conjugated(e);
  if (p.y() == 0.0) e.value.imag(0.0);
  return e;
}

/// Gaussian tail Phi-bar(z) = erfc(z/sqrt 2)/2. Throws overflow_error when
/// |Phi-bar(z)| leaves double range (on the imaginary axis, for |y| > y_overflow).
inline Evaluation gaussian_tail(const HalfPlanePoint& p) {
  if (p.is_origin()) return {{0.5, 0.0}, 0.0, Method::taylor};
  const double y = std::abs(p.y());
  Evaluation out;
  if (p.x() == 0.0) {
    if (y > y_overflow) throw overflow_error("gaussian_tail: |Phi-bar(iy)| overflows for |y| > y_overflow");
    const double e = E(y);
    const double ulps = y < detail::dawson_asymptotic_threshold ? 8.0 + 0.25 * y * y : 8.0;
    out = {{0.5, -e}, ulps * eps * e, Method::scaled_imaginary_axis};
  } else {
    const Evaluation r = detail::mills_ratio_upper(p.x(), y);
    const complex ph = phi({p.x(), y});
    out = {ph * r.value, std::abs(ph) * (r.abs_error_estimate + 8.0 * eps * std::abs(r.value)), r.method};
    if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag()))
      throw overflow_error("gaussian_tail: value overflows double range");
  }
  if (p.y() < 0.0) out = detail::conjugated(out);
  if (p.y() == 0.0) out.value.imag(0.0);
  return out;
}

/// Inverse Mills ratio R(z) = phi(z)/Phi-bar(z) = 1/r(z).
inline Evaluation inverse_mills(const HalfPlanePoint& p) {
  if (p.is_origin()) return {{sqrt_2_over_pi, 0.0}, 0.0, Method::taylor};
  const Evaluation r = detail::mills_ratio_upper(p.x(), std::abs(p.y()));
  const complex R = 1.0 / r.value;
  Evaluation out{R, r.abs_error_estimate / std::norm(r.value) + eps * std::abs(R), r.method};
  if (p.y() < 0.0) out = detail::conjugated(out);
  if (p.y() == 0.0) out.value.imag(0.0);
  return out;
}

/// S(z) = R(z)/(z + sqrt(2/pi)); S(0) = 1.
inline Evaluation S(const HalfPlanePoint& p) {
  if (p.is_origin()) return {{1.0, 0.0}, 0.0, Method::taylor};
  const double y = std::abs(p.y());
  const Evaluation r = detail::mills_ratio_upper(p.x(), y);
  const complex s = 1.0 / (r.value * complex(p.x() + sqrt_2_over_pi, y));
  Evaluation out{s, std::abs(s) * (r.abs_error_estimate / std::abs(r.value) + 2.0 * eps), r.method};
  if (p.y() < 0.0) out = detail::conjugated(out);
  if (p.y() == 0.0) out.value.imag(0.0);
  return out;
}

/// s(y) = |S(iy)|^2 in the overflow-free form 1/[(y^2 + 2/pi)((pi/2) e^{-y^2} + tr(y)^2)].
inline double s_imaginary_axis_stable(double y) {
  if (!std::isfinite(y) || y < 0.0) throw domain_error("s_imaginary_axis_stable: need finite y >= 0");
  if (y == 0.0) return 1.0;
  const double g = exp_neg_half_square(y);
  const double tr = dawson_rescaled(y);
  return 1.0 / ((y * y + two_over_pi) * (0.5 * pi * g * g + tr * tr));
}

}  // namespace mills
