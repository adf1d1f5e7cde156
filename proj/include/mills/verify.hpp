#pragma once

// Self-verification: seeded sample sweeps of every inequality, identity and
// constant the library relies on. Each suite draws from its own generator,
// seeded from (seed, suite index), so results do not depend on the thread
// count or on which suites run.

#include "mills/bounds.hpp"
#include "mills/derivatives.hpp"
#include "mills/extremal.hpp"
#include "mills/gaussian_core.hpp"
#include "mills/grid.hpp"
#include "mills/quadrature_oracle.hpp"
#include "mills/summation.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

namespace mills {

enum class VerifyLevel { quick, full };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::quick;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  double band_floor = mills::band_floor;  // test hook: a wrong floor must produce failures
};

struct VerifyFailure {
  std::string check;
  std::string point;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::size_t checks = 0;
  std::vector<VerifyFailure> failures;
};

struct VerificationSummary {
  std::size_t checks_run = 0;
  std::vector<VerifyFailure> failures;
  std::vector<SuiteReport> suites;
  double wall_time = 0.0;  // seconds
  bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::string fmt_point(double x, double y) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", x, y);
  return buf;
}

inline std::string fmt_pair(const char* a_name, double a, const char* b_name, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s = %.17g, %s = %.17g", a_name, a, b_name, b);
  return buf;
}

class SuiteRun {
 public:
  SuiteRun(SuiteReport& rep, std::uint64_t seed, std::size_t index, bool full)
      : rep_(rep), full_(full) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    rng_.seed(seq);
  }
  bool full() const { return full_; }
  std::size_t pick(std::size_t quick, std::size_t full) const { return full_ ? full : quick; }
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }

  void check(bool ok, const std::string& what, const std::string& point, const std::string& detail) {
    ++rep_.checks;
    if (!ok) rep_.failures.push_back({rep_.name + "/" + what, point, detail});
  }

 private:
  SuiteReport& rep_;
  bool full_;
  std::mt19937_64 rng_;
};

struct Suite {
  const char* name;
  std::function<void(SuiteRun&, const VerifyOptions&)> body;
};

inline double rel_diff(complex a, complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// z uniform in {|z| <= r, Re z >= 0}
inline HalfPlanePoint half_disc_point(SuiteRun& run, double r) {
  while (true) {
    const double x = run.uniform(0.0, r), y = run.uniform(-r, r);
    if (x * x + y * y <= r * r) return HalfPlanePoint(x, y);
  }
}

// Sample for the band/envelope/sign sweeps: half from |z| <= 50, half from |z| <= 5.
inline std::vector<HalfPlanePoint> sweep_points(SuiteRun& run) {
  const std::size_t n = run.pick(2000, 10000);
  std::vector<HalfPlanePoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pts.push_back(half_disc_point(run, i % 2 ? 5.0 : 50.0));
  return pts;
}

inline bool near_band_exclusion(const HalfPlanePoint& z, double y_star) {
  const double r = 1e-3;
  return std::abs(z.z()) < r || std::abs(z.z() - complex(0.0, y_star)) < r ||
         std::abs(z.z() + complex(0.0, y_star)) < r;
}

inline constexpr double y_star_reference = 1.6267889528751;

inline void suite_s_band(SuiteRun& run, const VerifyOptions& opt) {
  std::vector<HalfPlanePoint> pts = sweep_points(run);
  // the imaginary axis, where the lower edge is approached
  for (int j = -1000; j <= 1000; ++j) pts.emplace_back(0.0, 0.01 * j);
  for (const auto& z : pts) {
    if (near_band_exclusion(z, y_star_reference)) continue;
    const BoundReport r = s_band_check(z, opt.band_floor);
    run.check(r.passed, "floor < |S| < 1", fmt_point(z.x(), z.y()), fmt_pair("|S|", r.quantity, "floor", opt.band_floor));
  }
  const BoundReport origin = s_band_check(HalfPlanePoint(0.0, 0.0), opt.band_floor);
  run.check(origin.passed && origin.quantity == 1.0, "S(0) = 1", fmt_point(0, 0), fmt_pair("|S|", origin.quantity, "expected", 1.0));
}

inline void suite_r_envelope(SuiteRun& run, const VerifyOptions&) {
  for (const auto& z : sweep_points(run)) {
    if (z.is_origin()) continue;
    const BoundReport r = r_envelope_check(z);
    run.check(r.passed, "|R(z)| < |z + sqrt(2/pi)|", fmt_point(z.x(), z.y()), fmt_pair("|R|", r.quantity, "envelope", r.envelope));
  }
}

inline void suite_sign_structure(SuiteRun& run, const VerifyOptions&) {
  for (const auto& z : sweep_points(run)) {
    const complex R = inverse_mills(z).value;
    run.check(R.real() > 0.0, "Re R > 0", fmt_point(z.x(), z.y()), fmt_pair("Re R", R.real(), "bound", 0.0));
    const int want = (z.y() > 0) - (z.y() < 0);
    const int got = (R.imag() > 0) - (R.imag() < 0);
    run.check(want == got, "sign Im R = sign Im z", fmt_point(z.x(), z.y()), fmt_pair("Im R", R.imag(), "Im z", z.y()));
  }
}

inline void suite_conjugation(SuiteRun& run, const VerifyOptions&) {
  const std::size_t n = run.pick(500, 2000);
  for (std::size_t i = 0; i < n; ++i) {
    const HalfPlanePoint z = half_disc_point(run, 20.0);
    const complex a = inverse_mills(z.conj()).value, b = std::conj(inverse_mills(z).value);
    run.check(rel_diff(a, b) <= 1e-15, "R(conj z) = conj R(z)", fmt_point(z.x(), z.y()), fmt_pair("|diff|", std::abs(a - b), "|R|", std::abs(b)));
    const complex sa = S(z.conj()).value, sb = std::conj(S(z).value);
    run.check(rel_diff(sa, sb) <= 1e-15, "S(conj z) = conj S(z)", fmt_point(z.x(), z.y()), fmt_pair("|diff|", std::abs(sa - sb), "|S|", std::abs(sb)));
  }
}

inline void suite_special_values(SuiteRun& run, const VerifyOptions&) {
  const HalfPlanePoint o(0.0, 0.0);
  run.check(inverse_mills(o).value == complex(sqrt_2_over_pi, 0.0), "R(0) = sqrt(2/pi)", fmt_point(0, 0),
            fmt_pair("R(0)", inverse_mills(o).value.real(), "expected", sqrt_2_over_pi));
  run.check(gaussian_tail(o).value == complex(0.5, 0.0), "Phi-bar(0) = 1/2", fmt_point(0, 0),
            fmt_pair("Phi-bar(0)", gaussian_tail(o).value.real(), "expected", 0.5));
  // independent values: 1 - Phi(1) and E(1) to full precision
  const double tail1 = gaussian_tail(HalfPlanePoint(1.0, 0.0)).value.real();
  run.check(std::abs(tail1 - 0.15865525393145705) <= 2e-16, "Phi-bar(1)", fmt_point(1, 0), fmt_pair("value", tail1, "reference", 0.15865525393145705));
  const double e1 = E(1.0);
  run.check(std::abs(e1 - 0.4767191346256304) <= 2e-16, "E(1)", fmt_point(0, 1), fmt_pair("value", e1, "reference", 0.4767191346256304));
  // ODE r' = z r - 1 by complex central differences
  const std::size_t n = run.pick(50, 200);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = run.uniform(0.2, 10.0), y = run.uniform(-10.0, 10.0);
    const double h = 1e-4;
    const complex z(x, y);
    auto r = [](complex w) { return mills_ratio(HalfPlanePoint(w.real(), w.imag())).value; };
    const complex fd = (8.0 * (r(z + h) - r(z - h)) - (r(z + 2.0 * h) - r(z - 2.0 * h))) / (12.0 * h);
    const complex ode = z * r(z) - 1.0;
    run.check(std::abs(fd - ode) <= 1e-8 * std::max(1.0, std::abs(ode)), "r' = z r - 1", fmt_point(x, y), fmt_pair("|fd|", std::abs(fd), "|z r - 1|", std::abs(ode)));
  }
}

inline void suite_oracle(SuiteRun& run, const VerifyOptions&) {
  const int m = run.full() ? 30 : 12;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const HalfPlanePoint z(0.1 + 7.9 * i / (m - 1), 8.0 * j / (m - 1));
      const complex a = mills_ratio(z).value, b = mills_ratio_AB(z).value;
      run.check(rel_diff(a, b) < 1e-10, "r series/CF vs A - iB", fmt_point(z.x(), z.y()), fmt_pair("|r|", std::abs(a), "|A - iB|", std::abs(b)));
    }
}

inline void suite_axis_form(SuiteRun& run, const VerifyOptions&) {
  const int n = run.full() ? 6000 : 600;
  for (int j = 0; j <= n; ++j) {
    const double y = 6.0 * j / n;
    const double a = s_imaginary_axis_stable(y), b = std::norm(S(HalfPlanePoint(0.0, y)).value);
    run.check(std::abs(a - b) < 1e-12, "stable s(y) vs |S(iy)|^2", fmt_point(0, y), fmt_pair("stable", a, "direct", b));
  }
}

inline void suite_asymptotics(SuiteRun& run, const VerifyOptions&) {
  for (const double deg : {15.0, 45.0, 75.0}) {
    const double t = deg * pi / 180.0;
    const HalfPlanePoint z(1e3 * std::cos(t), 1e3 * std::sin(t));
    const double d = std::abs(inverse_mills(z).value / z.z() - 1.0);
    run.check(d < 1e-2, "R(z)/z -> 1 on a ray", fmt_point(z.x(), z.y()), fmt_pair("|R/z - 1|", d, "tol", 1e-2));
  }
  const HalfPlanePoint w(0.01, 1e3);
  const double d = std::abs(inverse_mills(w).value / w.z() - 1.0);
  run.check(d < 1e-2, "R(z)/z -> 1 near the axis", fmt_point(w.x(), w.y()), fmt_pair("|R/z - 1|", d, "tol", 1e-2));
  const double xr = 1e3 * mills_ratio(HalfPlanePoint(1e3, 0.0)).value.real();
  run.check(std::abs(xr - 1.0) < 1e-2, "x r(x) -> 1", fmt_point(1e3, 0), fmt_pair("x r(x)", xr, "limit", 1.0));
  const double ytr = 1e3 * dawson_rescaled(1e3);
  run.check(std::abs(ytr - 1.0) < 1e-2, "y tr(y) -> 1", fmt_point(0, 1e3), fmt_pair("y tr(y)", ytr, "limit", 1.0));
}

inline void suite_derivative_envelope(SuiteRun& run, const VerifyOptions&) {
  const std::size_t n = run.pick(15, 50);
  for (std::size_t i = 0; i < n; ++i) {
    const HalfPlanePoint z(run.uniform(0.5, 8.0), run.uniform(-8.0, 8.0));
    const auto d = derivatives_cauchy(10, z);
    for (int k = 1; k <= 10; ++k) {
      const double v = std::abs(d[static_cast<std::size_t>(k - 1)].value), b = derivative_bound(k, z);
      run.check(v < b, "|R^(" + std::to_string(k) + ")| < bound", fmt_point(z.x(), z.y()), fmt_pair("|R^(n)|", v, "bound", b));
    }
  }
}

inline void suite_derivative_fd(SuiteRun& run, const VerifyOptions&) {
  const std::size_t n = run.pick(15, 50);
  auto R = [](complex w) { return inverse_mills(HalfPlanePoint(w.real(), w.imag())).value; };
  for (std::size_t i = 0; i < n; ++i) {
    const HalfPlanePoint z(run.uniform(0.5, 8.0), run.uniform(-8.0, 8.0));
    const auto d = derivatives_cauchy(2, z);
    const complex c = z.z();
    const double h1 = 1e-5, h2 = 1e-3;
    const complex fd1 = (R(c + h1) - R(c - h1)) / (2.0 * h1);
    const complex fd2 = (R(c + h2) - 2.0 * R(c) + R(c - h2)) / (h2 * h2);
    run.check(std::abs(d[0].value - fd1) <= 1e-6 * std::max(1.0, std::abs(fd1)), "R' vs central difference", fmt_point(z.x(), z.y()),
              fmt_pair("|Cauchy|", std::abs(d[0].value), "|fd|", std::abs(fd1)));
    run.check(std::abs(d[1].value - fd2) <= 1e-4 * std::max(1.0, std::abs(fd2)), "R'' vs central difference", fmt_point(z.x(), z.y()),
              fmt_pair("|Cauchy|", std::abs(d[1].value), "|fd|", std::abs(fd2)));
    // R' = R^2 - z R follows from r' = z r - 1
    const complex r0 = R(c), ident = r0 * (r0 - c);
    run.check(std::abs(d[0].value - ident) <= 1e-8 * std::max(1.0, std::abs(ident)), "R' = R (R - z)", fmt_point(z.x(), z.y()),
              fmt_pair("|Cauchy|", std::abs(d[0].value), "|R(R - z)|", std::abs(ident)));
  }
}

// Agreement between radii is limited by the rounding of R on the circle times
// n!/rho^n; for |y| > 4x that reaches 1e-8 at n = 6, so the sample keeps |y| <= 4x.
inline void suite_derivative_radius(SuiteRun& run, const VerifyOptions&) {
  const std::size_t n = run.pick(15, 50);
  CauchyConfig wide;
  wide.radius_fraction = 0.9;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = run.uniform(0.5, 8.0);
    const double ymax = std::min(8.0, 4.0 * x);
    const HalfPlanePoint z(x, run.uniform(-ymax, ymax));
    const auto a = derivatives_cauchy(6, z), b = derivatives_cauchy(6, z, wide);
    for (std::size_t k = 0; k < 6; ++k) {
      const double rd = rel_diff(a[k].value, b[k].value);
      run.check(rd <= 1e-8, "radius 0.5 vs 0.9, n = " + std::to_string(k + 1), fmt_point(z.x(), z.y()), fmt_pair("rel diff", rd, "tol", 1e-8));
    }
    const auto c = derivatives_cauchy(3, z.conj());
    for (std::size_t k = 0; k < 3; ++k) {
      const double rd = rel_diff(c[k].value, std::conj(a[k].value));
      run.check(rd <= 1e-10, "R^(n)(conj z) = conj R^(n)(z)", fmt_point(z.x(), z.y()), fmt_pair("rel diff", rd, "tol", 1e-10));
    }
  }
}

inline void suite_vanishing_ratio(SuiteRun& run, const VerifyOptions&) {
  const double xs[] = {10.0, 30.0, 100.0, 300.0};
  for (int n = 1; n <= 3; ++n) {
    const auto v = vanishing_ratio(n, xs);
    for (std::size_t i = 1; i < v.size(); ++i)
      run.check(v[i] < v[i - 1], "ratio decreasing, n = " + std::to_string(n), fmt_point(xs[i], 0), fmt_pair("ratio", v[i], "previous", v[i - 1]));
    run.check(v.back() < 1e-2 * v.front(), "last < 1e-2 first, n = " + std::to_string(n), fmt_point(xs[3], 0), fmt_pair("last", v.back(), "first", v.front()));
  }
}

inline void suite_extremal_constants(SuiteRun& run, const VerifyOptions&) {
  ExtremalConstants c;
  try {
    c = extremal_constants();
  } catch (const std::exception& e) {
    run.check(false, "constants computed", "-", e.what());
    return;
  }
  auto in = [&](const char* what, double v, double lo, double hi) {
    run.check(v > lo && v < hi, what, "-", fmt_pair("value", v, "interval lo", lo) + ", hi = " + format_g17(hi));
  };
  in("y*", c.y_star, 1.6267, 1.6268);
  run.check(c.y_star_bracket.width() <= 1e-6, "y* bracket width", "-", fmt_pair("width", c.y_star_bracket.width(), "tol", 1e-6));
  in("|S(iy*)|", c.s_at_y_star, 0.6861 - 1e-15, 0.6863 + 1e-15);
  run.check(std::abs(c.x_star - (pi - 1.0) * std::sqrt(2.0 / pi)) <= 1e-12, "x* closed form", "-", fmt_pair("x*", c.x_star, "(pi-1)sqrt(2/pi)", (pi - 1.0) * std::sqrt(2.0 / pi)));
  in("x*", c.x_star, 1.7087, 1.7088);
  in("S(x*)", c.S_at_x_star, 0.8435, 0.8455);
  in("y21", c.y21, 0.684, 0.687);
  in("y22", c.y22, 1.406, 1.409);
  in("s(1)", s(1.0), 0.5525, 0.5545);
  in("s(3)", s(3.0), 0.6695, 0.6715);
  run.check(std::abs(real_axis_ratio_derivative(c.x_star)) < 1e-15, "h'(x*) = 0", fmt_point(c.x_star, 0), fmt_pair("h'(x*)", real_axis_ratio_derivative(c.x_star), "tol", 1e-15));
  for (const auto& br : {c.y21_bracket, c.y22_bracket})
    run.check(br.width() <= 1e-8 && s2_derivative(br.lo) * s2_derivative(br.hi) <= 0.0, "s2' root bracket", fmt_point(0, br.mid()),
              fmt_pair("width", br.width(), "tol", 1e-8));
}

inline void suite_monotonicity(SuiteRun& run, const VerifyOptions&) {
  // s: one sign change of first differences on 0(0.01)6, at y*
  int changes = 0;
  double at = 0.0;
  double prev = s(0.01) - s(0.0);
  for (int j = 1; j < 600; ++j) {
    const double d = s(0.01 * (j + 1)) - s(0.01 * j);
    if ((d > 0) != (prev > 0)) ++changes, at = 0.01 * j;
    prev = d;
  }
  run.check(changes == 1, "s decreasing then increasing", "-", fmt_pair("sign changes", changes, "expected", 1));
  // differences change sign at grid point `at`, so the minimum lies in [at - 0.01, at + 0.01]
  run.check(at - 0.01 <= 1.6267 && at + 0.01 >= 1.6268, "s turns at y*", fmt_point(0, at), fmt_pair("grid cell lo", at - 0.01, "hi", at + 0.01));
  // s1 increasing on (0, 6]
  const int m = run.full() ? 6000 : 600;
  for (int j = 1; j < m; ++j) {
    const double a = s1(6.0 * j / m), b = s1(6.0 * (j + 1) / m);
    run.check(b > a, "s1 increasing", fmt_point(0, 6.0 * j / m), fmt_pair("s1(y)", a, "s1(y + dy)", b));
  }
  // s2: increasing, decreasing, increasing with turns at y21, y22
  const auto [b21, b22] = s2_turning_points();
  std::vector<double> turns;
  prev = s2(0.01) - s2(0.0);
  for (int j = 1; j < 600; ++j) {
    const double d = s2(0.01 * (j + 1)) - s2(0.01 * j);
    if ((d > 0) != (prev > 0)) turns.push_back(0.01 * j);
    prev = d;
  }
  run.check(turns.size() == 2, "s2 pattern + - +", "-", fmt_pair("turns", double(turns.size()), "expected", 2));
  if (turns.size() == 2) {
    run.check(std::abs(turns[0] - b21.mid()) <= 1e-2, "s2 first turn", fmt_point(0, turns[0]), fmt_pair("grid", turns[0], "y21", b21.mid()));
    run.check(std::abs(turns[1] - b22.mid()) <= 1e-2, "s2 second turn", fmt_point(0, turns[1]), fmt_pair("grid", turns[1], "y22", b22.mid()));
  }
  // h decreasing on [0, x*], increasing after
  const double xs = x_star();
  for (int j = 0; j < 200; ++j) {
    const double x = 8.0 * j / 200;
    const double d = real_axis_ratio(x + 0.04) - real_axis_ratio(x);
    const bool want_up = x >= xs;
    if (x < xs && x + 0.04 > xs) continue;
    run.check((d > 0) == want_up, "h turns at x*", fmt_point(x, 0), fmt_pair("h difference", d, "x*", xs));
  }
}

// Closed forms for s1, s2 and h against numerical derivatives of their defining ratios.
inline void suite_closed_forms(SuiteRun& run, const VerifyOptions&) {
  auto d5 = [](auto f, double t, double h) { return (8.0 * (f(t + h) - f(t - h)) - (f(t + 2 * h) - f(t - 2 * h))) / (12.0 * h); };
  auto f = [](double y) { return std::exp(y * y) / (2.0 * pi) / (y * y + s_k); };
  auto g = [](double y) { const double e = E(y); return 0.25 + e * e; };
  auto f1 = [](double y) { return s1(y) * E(y); };
  auto g1 = [](double y) { return E(y); };
  const std::size_t n = run.pick(20, 60);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = run.uniform(0.1, 5.0);
    const double num1 = d5(f, y, 1e-3) / d5(g, y, 1e-3);
    run.check(std::abs(num1 - s1(y)) <= 1e-8 * std::abs(s1(y)), "s1 = f'/g'", fmt_point(0, y), fmt_pair("closed", s1(y), "numeric", num1));
    const double num2 = d5(f1, y, 1e-3) / d5(g1, y, 1e-3);
    run.check(std::abs(num2 - s2(y)) <= 1e-8 * std::abs(s2(y)), "s2 = f1'/g1'", fmt_point(0, y), fmt_pair("closed", s2(y), "numeric", num2));
    const double t = 2.0 * y;
    run.check(std::abs(s2(t) * s2_denominator(t) - s2_numerator(t)) <= 1e-13 * s2_numerator(t), "s2 rational", fmt_point(0, t),
              fmt_pair("s2 D", s2(t) * s2_denominator(t), "N", s2_numerator(t)));
  }
  auto fr = [](double x) { return std::real(phi(complex(x, 0.0))) / (x + sqrt_2_over_pi); };
  auto gr = [](double x) { return gaussian_tail(HalfPlanePoint(x, 0.0)).value.real(); };
  for (std::size_t i = 0; i < n; ++i) {
    const double x = run.uniform(0.1, 6.0);
    const double num = d5(fr, x, 1e-3) / d5(gr, x, 1e-3);
    run.check(std::abs(num - real_axis_ratio(x)) <= 1e-10 * real_axis_ratio(x), "h = f'/g' on the real axis", fmt_point(x, 0),
              fmt_pair("closed", real_axis_ratio(x), "numeric", num));
  }
}

inline void suite_vertical_minima(SuiteRun& run, const VerifyOptions&) {
  const double xs[] = {0.0, 0.5, 1.0, 2.0, 4.0, 8.0};
  const auto mins = vertical_min_sweep(xs);
  const double at_axis = std::sqrt(s(y_star_reference));
  run.check(std::abs(mins[0].minimum - at_axis) <= 1e-3, "x = 0 minimum is |S(iy*)|", fmt_point(0, mins[0].y), fmt_pair("minimum", mins[0].minimum, "|S(iy*)|", at_axis));
  for (std::size_t i = 0; i < mins.size(); ++i) {
    run.check(mins[i].minimum > 0.686 && mins[i].minimum < 1.0, "minimum in (0.686, 1)", fmt_point(mins[i].x, mins[i].y), fmt_pair("minimum", mins[i].minimum, "lo", 0.686));
    if (i > 0)
      run.check(mins[i].minimum > mins[i - 1].minimum, "minima increasing in x", fmt_point(mins[i].x, mins[i].y), fmt_pair("minimum", mins[i].minimum, "previous", mins[i - 1].minimum));
  }
}

inline void suite_elliptic(SuiteRun& run, const VerifyOptions&) {
  std::vector<double> j(50);
  for (int i = 0; i < 50; ++i) j[static_cast<std::size_t>(i)] = J(1.0, i / 49.0);
  for (std::size_t i = 1; i < 50; ++i)
    run.check(j[i] <= j[i - 1], "J(1, b) nonincreasing", fmt_point(i / 49.0, 0), fmt_pair("J", j[i], "previous", j[i - 1]));
  for (std::size_t i = 1; i + 1 < 50; ++i) {
    const double second = j[i + 1] - 2.0 * j[i] + j[i - 1];
    run.check(second <= 1e-13, "J(1, b) concave", fmt_point(i / 49.0, 0), fmt_pair("second difference", second, "tol", 1e-13));
  }
  const double ratio = J(1.0, 1.0) / J(1.0, 0.0);
  run.check(ratio > 0.9002 && ratio < 0.9004 && std::abs(ratio - 2.0 * std::sqrt(2.0) / pi) < 1e-12, "J(1,1)/J(1,0) = 2 sqrt 2/pi", "-",
            fmt_pair("ratio", ratio, "2 sqrt 2/pi", 2.0 * std::sqrt(2.0) / pi));
  // the derivative envelope sits above the R envelope: sqrt(a + b) = |z + c| + x
  const std::size_t n = run.pick(50, 200);
  for (std::size_t i = 0; i < n; ++i) {
    const HalfPlanePoint z(run.uniform(0.1, 10.0), run.uniform(-10.0, 10.0));
    const EllipticParams p = elliptic_params(z);
    const double lhs = std::sqrt(p.a + p.b), rhs = std::abs(complex(z.x() + sqrt_2_over_pi, z.y())) + z.x();
    run.check(std::abs(lhs - rhs) <= 1e-13 * rhs && p.b <= p.a, "elliptic parameters", fmt_point(z.x(), z.y()), fmt_pair("sqrt(a + b)", lhs, "|z + c| + x", rhs));
  }
}

inline void suite_summation(SuiteRun& run, const VerifyOptions&) {
  const std::size_t n = run.pick(4, 10);
  for (std::size_t i = 0; i < n; ++i) {
    SumRequest req{run.uniform(10.0, 50.0), run.uniform(0.01, 0.5), 100 + static_cast<std::int64_t>(run.uniform(0.0, 4900.0)), 4};
    const SumResult d = sum_direct(req), e = sum_euler_maclaurin(req);
    const std::string pt = "x0 = " + format_g17(req.x0) + ", delta = " + format_g17(req.delta) + ", N = " + std::to_string(req.count);
    run.check(std::abs(d.value - e.value) <= e.remainder_bound, "|EM - direct| <= bound", pt, fmt_pair("|EM - direct|", std::abs(d.value - e.value), "bound", e.remainder_bound));
    run.check(e.remainder_bound < 1e-6 * std::abs(d.value), "bound relative < 1e-6", pt, fmt_pair("bound", e.remainder_bound, "|direct|", std::abs(d.value)));
  }
  const SumResult o2 = sum_euler_maclaurin({20.0, 0.1, 1000, 2}), o4 = sum_euler_maclaurin({20.0, 0.1, 1000, 4});
  run.check(o4.remainder_bound < o2.remainder_bound, "order 4 bound below order 2", "x0 = 20", fmt_pair("order 4", o4.remainder_bound, "order 2", o2.remainder_bound));
  const SumResult far = sum_euler_maclaurin({40.0, 0.1, 1000, 4});
  run.check(far.remainder_bound < o4.remainder_bound / 4.0, "bound shrinks with x0", "x0 = 20 -> 40", fmt_pair("x0 = 40", far.remainder_bound, "x0 = 20", o4.remainder_bound));
}

inline void suite_figure_grids(SuiteRun& run, const VerifyOptions& opt) {
  const auto abs_pts = compute_grid(default_grid(GridQuantity::absS), GridQuantity::absS, opt.threads);
  double lo = 2.0, hi = 0.0;
  for (const auto& p : abs_pts) lo = std::min(lo, p.value), hi = std::max(hi, p.value);
  run.check(lo > 0.686 && lo < 0.687, "absS minimum", "-", fmt_pair("min", lo, "lo", 0.686));
  run.check(hi <= 1.0 + 1e-12, "absS maximum", "-", fmt_pair("max", hi, "bound", 1.0 + 1e-12));
  const GridSpec spec = default_grid(GridQuantity::imS);
  const auto im = compute_grid(spec, GridQuantity::imS, opt.threads);
  const auto cols = static_cast<std::size_t>(spec.cols);
  for (std::size_t i = 0; i < static_cast<std::size_t>(spec.rows); ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const auto& a = im[i * cols + j];
      const auto& b = im[i * cols + cols - 1 - j];
      run.check(a.y == -b.y && std::abs(a.value + b.value) <= 1e-12, "imS antisymmetric", fmt_point(a.x, a.y), fmt_pair("imS(y)", a.value, "imS(-y)", b.value));
    }
}

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"s_band", suite_s_band},
      {"r_envelope", suite_r_envelope},
      {"sign_structure", suite_sign_structure},
      {"conjugation", suite_conjugation},
      {"special_values", suite_special_values},
      {"oracle_equivalence", suite_oracle},
      {"imaginary_axis_form", suite_axis_form},
      {"asymptotics", suite_asymptotics},
      {"derivative_envelope", suite_derivative_envelope},
      {"derivative_finite_difference", suite_derivative_fd},
      {"derivative_radius", suite_derivative_radius},
      {"vanishing_ratio", suite_vanishing_ratio},
      {"extremal_constants", suite_extremal_constants},
      {"monotonicity", suite_monotonicity},
      {"closed_forms", suite_closed_forms},
      {"vertical_minima", suite_vertical_minima},
      {"elliptic", suite_elliptic},
      {"summation", suite_summation},
      {"figure_grids", suite_figure_grids},
  };
  return all;
}

}  // namespace detail

inline std::vector<std::string> verification_suite_names() {
  std::vector<std::string> out;
  for (const auto& s : detail::suites()) out.emplace_back(s.name);
  return out;
}

/// Runs every suite. Suites are handed to `threads` workers; reports are
/// collected in suite order.
inline VerificationSummary run_verification(const VerifyOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  const auto& all = detail::suites();
  std::vector<SuiteReport> reports(all.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < all.size(); i = next++) {
      reports[i].name = all[i].name;
      detail::SuiteRun run(reports[i], opt.seed, i, opt.level == VerifyLevel::full);
      try {
        all[i].body(run, opt);
      } catch (const std::exception& e) {
        run.check(false, "no exception", "-", e.what());
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(all.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }
  VerificationSummary out;
  for (auto& r : reports) {
    out.checks_run += r.checks;
    out.failures.insert(out.failures.end(), r.failures.begin(), r.failures.end());
  }
  out.suites = std::move(reports);
  out.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace mills
