#pragma once

// Extremal constants of S on the two axes.
//
// Imaginary axis: s(y) = |S(iy)|^2 = f/g with f = phi(iy)^2/(y^2 + k),
// g = 1/4 + E(y)^2, k = 2/pi. Its derivative ratios are
//
//   s1 = f'/g' = y (y^2 + k - 1) / (tr(y) (y^2 + k)^2),
//   s2 = (s1 E)'/E' = N(y^2)/(y^2 + k)^3,
//   N(t) = t^3 + (2k - 2) t^2 + (k^2 - k + 3) t + k(k - 1),
//
// where tr is the rescaled Dawson function. As a function of y, s2 is a ratio
// of two degree-6 polynomials.
//
// Real axis: S(x) = f/g with f = phi(x)/(x + c), g = Phi-bar(x), c = sqrt(2/pi),
// and f'/g' = h(x) = (x^2 + cx + 1)/(x + c)^2, h'(x) = (cx + c^2 - 2)/(x + c)^3,
// whose only zero is x* = (2 - c^2)/c = (pi - 1) sqrt(2/pi).

#include "mills/constants.hpp"
#include "mills/errors.hpp"
#include "mills/gaussian_core.hpp"

#include <boost/math/tools/roots.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mills {

inline constexpr double s_k = two_over_pi;

/// s(y) = |S(iy)|^2 for y >= 0, overflow-free.
inline double s(double y) {
  if (!(y >= 0.0)) throw domain_error("s: need y >= 0");
  return s_imaginary_axis_stable(y);
}

/// s1(y) = f'(y)/g'(y); s1(0) is the limit (k - 1)/k^2.
inline double s1(double y) {
  if (!(y >= 0.0)) throw domain_error("s1: need y >= 0");
  const double t = y * y + s_k;
  if (y == 0.0) return (s_k - 1.0) / (s_k * s_k);
  return y * (t - 1.0) / (dawson_rescaled(y) * t * t);
}

/// s1'(y) in closed form, using tr' = 1 - y tr.
inline double s1_derivative(double y) {
  if (!(y > 0.0)) throw domain_error("s1_derivative: need y > 0");
  const double y2 = y * y;
  const double t = y2 + s_k;
  const double p = y * (t - 1.0) / (t * t);
  const double dp = ((3.0 * y2 + s_k - 1.0) * t - 4.0 * y2 * (t - 1.0)) / (t * t * t);
  const double tr = dawson_rescaled(y);
  return dp / tr - p * (1.0 - y * tr) / (tr * tr);
}

/// Central-difference estimate of s1'(y)/y, the quantity whose y -> 0 limit is tracked.
inline double s1_derivative_over_y_fd(double y, double h = 1e-5) {
  if (!(y > h) || !(h > 0.0)) throw domain_error("s1_derivative_over_y_fd: need y > h > 0");
  return (s1(y + h) - s1(y - h)) / (2.0 * h) / y;
}

/// Coefficients of N(t), highest power first.
inline std::array<double, 4> s2_numerator_coefficients() {
  const double k = s_k;
  return {1.0, 2.0 * k - 2.0, k * k - k + 3.0, k * (k - 1.0)};
}

inline double s2_numerator(double y) {
  const auto c = s2_numerator_coefficients();
  const double t = y * y;
  return ((c[0] * t + c[1]) * t + c[2]) * t + c[3];
}

inline double s2_denominator(double y) {
  const double t = y * y + s_k;
  return t * t * t;
}

/// s2(y) = N(y^2)/(y^2 + k)^3.
inline double s2(double y) {
  if (!(y >= 0.0)) throw domain_error("s2: need y >= 0");
  return s2_numerator(y) / s2_denominator(y);
}

/// s2'(y) = 2y [N'(t)(t + k) - 3N(t)]/(t + k)^4, t = y^2.
inline double s2_derivative(double y) {
  if (!(y >= 0.0)) throw domain_error("s2_derivative: need y >= 0");
  const auto c = s2_numerator_coefficients();
  const double t = y * y;
  const double n = ((c[0] * t + c[1]) * t + c[2]) * t + c[3];
  const double dn = (3.0 * c[0] * t + 2.0 * c[1]) * t + c[2];
  const double u = t + s_k;
  return 2.0 * y * (dn * u - 3.0 * n) / (u * u * u * u);
}

/// h(x) = (x^2 + cx + 1)/(x + c)^2, the derivative ratio of S on the real axis.
inline double real_axis_ratio(double x) {
  if (!(x >= 0.0)) throw domain_error("real_axis_ratio: need x >= 0");
  const double c = sqrt_2_over_pi;
  return (x * x + c * x + 1.0) / ((x + c) * (x + c));
}

inline double real_axis_ratio_derivative(double x) {
  if (!(x >= 0.0)) throw domain_error("real_axis_ratio_derivative: need x >= 0");
  const double c = sqrt_2_over_pi;
  const double u = x + c;
  return (c * x + c * c - 2.0) / (u * u * u);
}

/// x* = (pi - 1) sqrt(2/pi).
inline double x_star() { return (pi - 1.0) * sqrt_2_over_pi; }

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
};

struct ExtremalConstants {
  double y_star = 0.0;
  Bracket y_star_bracket;
  double s_at_y_star = 0.0;  // |S(iy*)|
  double x_star = 0.0;
  double S_at_x_star = 0.0;
  double y21 = 0.0;
  Bracket y21_bracket;
  double y22 = 0.0;
  Bracket y22_bracket;
};

namespace detail {

inline constexpr double y_star_fd_step = 1e-7;

inline double s_prime_fd(double y) {
  return (s(y + y_star_fd_step) - s(y - y_star_fd_step)) / (2.0 * y_star_fd_step);
}

template <class F>
Bracket golden_section(F&& f, double a, double b, double width) {
  const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > width) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return {a, b};
}

template <class F>
Bracket sign_change_root(F&& f, double lo, double hi, double width, const char* what) {
  if (!(f(lo) * f(hi) < 0.0)) throw accuracy_error(std::string(what) + ": no sign change on the search interval");
  auto tol = [width](double a, double b) { return std::abs(b - a) <= width; };
  std::uintmax_t max_iter = 200;
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, tol, max_iter);
  return {r.first, r.second};
}

}  // namespace detail

/// Minimizer of s on [0.5, 3]: golden section to width 1e-4, then bisection on the
/// sign of a central-difference s' (step 1e-7) to width 1e-6. Throws accuracy_error
/// unless s'(1.6267) < 0 < s'(1.6268) and the result lies strictly between them.
inline ExtremalConstants find_y_star() {
  const Bracket coarse = detail::golden_section([](double y) { return s(y); }, 0.5, 3.0, 1e-4);
  double lo = coarse.lo - 1e-4, hi = coarse.hi + 1e-4;
  if (!(detail::s_prime_fd(lo) < 0.0 && detail::s_prime_fd(hi) > 0.0))
    throw accuracy_error("find_y_star: golden-section bracket does not contain a sign change of s'");
  auto sign_tol = [](double a, double b) { return b - a <= 1e-6; };
  const auto r = boost::math::tools::bisect([](double y) { return detail::s_prime_fd(y); }, lo, hi, sign_tol);
  ExtremalConstants out;
  out.y_star_bracket = {r.first, r.second};
  out.y_star = out.y_star_bracket.mid();
  out.s_at_y_star = std::sqrt(s(out.y_star));

  constexpr double y01 = 1.6267, y02 = 1.6268;
  if (!(detail::s_prime_fd(y01) < 0.0 && detail::s_prime_fd(y02) > 0.0))
    throw accuracy_error("find_y_star: s' does not change sign between 1.6267 and 1.6268");
  if (!(out.y_star_bracket.lo > y01 && out.y_star_bracket.hi < y02))
    throw accuracy_error("find_y_star: minimizer bracket falls outside (1.6267, 1.6268)");
  return out;
}

/// Zeros of s2' near 0.685 and 1.407, each bracketed to width 1e-8.
inline std::pair<Bracket, Bracket> s2_turning_points() {
  auto ds2 = [](double y) { return s2_derivative(y); };
  return {detail::sign_change_root(ds2, 0.3, 1.0, 1e-8, "s2_turning_points"),
          detail::sign_change_root(ds2, 1.0, 2.0, 1e-8, "s2_turning_points")};
}

/// Every constant: y*, |S(iy*)|, x*, S(x*), y21, y22.
inline ExtremalConstants extremal_constants() {
  ExtremalConstants out = find_y_star();
  out.x_star = x_star();
  out.S_at_x_star = S(HalfPlanePoint(out.x_star, 0.0)).value.real();
  const auto [b21, b22] = s2_turning_points();
  out.y21_bracket = b21;
  out.y21 = b21.mid();
  out.y22_bracket = b22;
  out.y22 = b22.mid();
  return out;
}

struct VerticalMinimum {
  double x = 0.0;
  double y = 0.0;        // minimizing y >= 0
  double minimum = 0.0;  // min over y of |S(x + iy)|
};

inline constexpr double sweep_default_y_range = 20.0;

/// min_y |S(x + iy)| for each x, over y in [0, y_range] (|S| is even in y).
/// Coarse scan with step 0.01 followed by golden section to 1e-9. The range
/// must reach the tail, |S(x + i y_range)| > 0.99: an explicit y_range that
/// does not is a domain_error, while the default 20 is doubled as needed
/// (|S(8 + 20i)| is only 0.984).
inline std::vector<VerticalMinimum> vertical_min_sweep(std::span<const double> x_list,
                                                       std::optional<double> y_range = std::nullopt) {
  if (y_range && !(*y_range > 0.0)) throw domain_error("vertical_min_sweep: need y_range > 0");
  std::vector<VerticalMinimum> out;
  out.reserve(x_list.size());
  for (std::size_t i = 0; i < x_list.size(); ++i) {
    const double x = x_list[i];
    if (!(x >= 0.0) || (i > 0 && !(x > x_list[i - 1])))
      throw domain_error("vertical_min_sweep: x_list must be increasing and nonnegative");
    auto mod = [x](double y) { return std::abs(S(HalfPlanePoint(x, y)).value); };
    double range = y_range.value_or(sweep_default_y_range);
    while (!(mod(range) > 0.99)) {
      if (y_range || range > 1e6) throw domain_error("vertical_min_sweep: |S(x + i y_range)| <= 0.99; y_range too small");
      range *= 2.0;
    }

    constexpr double step = 0.01;
    const int steps = static_cast<int>(std::ceil(range / step));
    int best = 0;
    double best_val = mod(0.0);
    for (int j = 1; j <= steps; ++j) {
      const double v = mod(std::min(j * step, range));
      if (v < best_val) best_val = v, best = j;
    }
    const double a = std::max(0.0, (best - 1) * step);
    const double b = std::min(range, (best + 1) * step);
    const Bracket br = detail::golden_section(mod, a, b, 1e-9);
    double y = br.mid();
    double v = mod(y);
    if (best_val < v) v = best_val, y = std::min(best * step, range);
    out.push_back({x, y, v});
  }
  return out;
}

}  // namespace mills
