#pragma once

// Sums s = sum_{i=0}^{N-1} R(x0 + i delta) over real arguments, directly and by
// classical Euler-Maclaurin of order 2m (a = x0, b = x0 + (N-1) delta):
//
//   s = (1/delta) int_a^b R + (R(a) + R(b))/2
//       + sum_{k=1}^{m} B_{2k}/(2k)! delta^{2k-1} (R^(2k-1)(b) - R^(2k-1)(a)) + rem,
//
//   |rem| <= 2 zeta(2m)/(2 pi)^{2m} delta^{2m-1} int_a^b |R^(2m)|
//         <= 2 zeta(2m)/(2 pi)^{2m} delta^{2m} (N-1) max_{[a,b]} R^(2m)_max.
//
// The odd derivatives come from the Cauchy integral, the integral from
// adaptive Gauss-Kronrod.

#include "mills/bounds.hpp"
#include "mills/derivatives.hpp"
#include "mills/errors.hpp"
#include "mills/gaussian_core.hpp"
#include "mills/numeric.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mills {

struct SumRequest {
  double x0 = 1.0;
  double delta = 1.0;
  std::int64_t count = 1;
  int order = 4;

  void validate() const {
    if (!(x0 > 0.0) || !std::isfinite(x0)) throw domain_error("SumRequest: need finite x0 > 0");
    if (!(delta > 0.0) || !std::isfinite(delta)) throw domain_error("SumRequest: need finite delta > 0");
    if (count < 1) throw domain_error("SumRequest: need count >= 1");
    if (order < 2 || order % 2 != 0) throw domain_error("SumRequest: order must be an even integer >= 2");
  }
  double last() const { return x0 + double(count - 1) * delta; }
};

enum class SumMethod { direct, euler_maclaurin };

inline std::string_view to_string(SumMethod m) {
  return m == SumMethod::direct ? "direct" : "euler_maclaurin";
}

struct SumResult {
  double value = 0.0;
  SumMethod method = SumMethod::direct;
  double remainder_bound = 0.0;
  std::int64_t terms_evaluated = 0;  // terms of the sum evaluated explicitly
};

/// Pairwise sum of R(x0 + i delta), i = 0..N-1.
inline SumResult sum_direct(const SumRequest& req) {
  req.validate();
  std::vector<double> terms(static_cast<std::size_t>(req.count));
  for (std::int64_t i = 0; i < req.count; ++i)
    terms[static_cast<std::size_t>(i)] = inverse_mills(HalfPlanePoint(req.x0 + double(i) * req.delta, 0.0)).value.real();
  return {pairwise_sum<double>(terms), SumMethod::direct, 0.0, req.count};
}

inline constexpr int euler_maclaurin_max_order = 8;

namespace detail {

// B_{2k}/(2k)! and 2 zeta(2k)/(2 pi)^{2k} for k = 1..4
inline constexpr std::array<double, 4> em_bernoulli_over_factorial = {
    1.0 / 6.0 / 2.0, -1.0 / 30.0 / 24.0, 1.0 / 42.0 / 720.0, -1.0 / 30.0 / 40320.0};

inline double em_remainder_constant(int m) {
  const double p2 = pi * pi;
  const std::array<double, 4> zeta = {p2 / 6.0, p2 * p2 / 90.0, p2 * p2 * p2 / 945.0, p2 * p2 * p2 * p2 / 9450.0};
  return 2.0 * zeta[static_cast<std::size_t>(m - 1)] / std::pow(2.0 * pi, 2 * m);
}

}  // namespace detail

/// Euler-Maclaurin estimate of the sum for order 2m in {2, 4, 6, 8}.
/// remainder_bound covers the truncation term plus the rounding and quadrature
/// error of both this estimate and a pairwise direct sum, so
/// |value - sum_direct(req).value| <= remainder_bound. Throws overflow_error
/// when the bound is not finite or exceeds |value| (x0 too small for the
/// order); fall back to sum_direct then.
inline SumResult sum_euler_maclaurin(const SumRequest& req) {
  req.validate();
  if (req.order > euler_maclaurin_max_order)
    throw domain_error("sum_euler_maclaurin: order must be 2, 4, 6 or 8");
  const int m = req.order / 2;
  const double a = req.x0, b = req.last(), d = req.delta;
  const double n_minus_1 = double(req.count - 1);

  // R^(2m)_max decreases in x on the real axis; the max of both ends guards rounding
  const double bound_2m = std::max(derivative_bound(req.order, HalfPlanePoint(a, 0.0)),
                                   derivative_bound(req.order, HalfPlanePoint(b, 0.0)));
  const double truncation = detail::em_remainder_constant(m) * std::pow(d, req.order) * n_minus_1 * bound_2m;

  const Evaluation ra = inverse_mills(HalfPlanePoint(a, 0.0));
  const Evaluation rb = inverse_mills(HalfPlanePoint(b, 0.0));
  auto integrand = [](double x) { return inverse_mills(HalfPlanePoint(x, 0.0)).value.real(); };
  const QuadratureResult q = b > a ? integrate(integrand, a, b, 1e-13) : QuadratureResult{};

  double value = q.value / d + 0.5 * (ra.value.real() + rb.value.real());
  double fp = (q.error + 4.0 * eps * std::abs(q.value)) / d + ra.abs_error_estimate + rb.abs_error_estimate;
  if (b > a) {
    const auto da = derivatives_cauchy(req.order - 1, HalfPlanePoint(a, 0.0));
    const auto db = derivatives_cauchy(req.order - 1, HalfPlanePoint(b, 0.0));
    double corr = 0.0;
    for (int k = 1; k <= m; ++k) {
      const auto idx = static_cast<std::size_t>(2 * k - 2);
      const double w = detail::em_bernoulli_over_factorial[static_cast<std::size_t>(k - 1)] * std::pow(d, 2 * k - 1);
      corr += w * (db[idx].value.real() - da[idx].value.real());
      fp += std::abs(w) * (da[idx].abs_error_estimate + db[idx].abs_error_estimate);
    }
    value += corr;
  }
  // rounding in a pairwise sum of N positive terms of total about |value|
  const double levels = std::ceil(std::log2(double(req.count))) + 4.0;
  fp += 2.0 * levels * eps * std::abs(value);

  const double bound = truncation + fp;
  if (!std::isfinite(bound) || bound > std::abs(value))
    throw overflow_error("sum_euler_maclaurin: remainder bound " + std::to_string(bound) +
                         " exceeds the sum; x0 is too small for order " + std::to_string(req.order));
  return {value, SumMethod::euler_maclaurin, bound, 2};
}

}  // namespace mills
