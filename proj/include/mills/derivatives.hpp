#pragma once

// n-th derivatives of R by the Cauchy integral over the circle |w - z| = rho,
// rho = radius_fraction * Re z, which stays inside the open right half-plane:
//
//   R^(n)(z) = n!/(2 pi rho^n) int_0^{2pi} R(z + rho e^{it}) e^{-int} dt.
//
// The integrand is periodic and analytic, so the N-node trapezoid rule
// converges geometrically; N is doubled (reusing the previous nodes) until the
// N and N/2 results agree. The samples are of R(w) - w, which has the same
// derivatives of order >= 2 and is far smaller than R when |z| is large, so
// less rounding is amplified by n!/rho^n.

#include "mills/bounds.hpp"
#include "mills/errors.hpp"
#include "mills/gaussian_core.hpp"
#include "mills/numeric.hpp"

#include <bit>
#include <cmath>
#include <span>
#include <string>
#include <vector>

namespace mills {

struct CauchyConfig {
  double radius_fraction = 0.5;
  int node_count = 256;

  void validate() const {
    if (!(radius_fraction > 0.0 && radius_fraction < 1.0))
      throw domain_error("CauchyConfig: radius_fraction must lie in (0, 1)");
    if (node_count < 16 || !std::has_single_bit(static_cast<unsigned>(node_count)))
      throw domain_error("CauchyConfig: node_count must be a power of two >= 16");
  }
};

inline constexpr int cauchy_max_nodes = 4096;
inline constexpr double cauchy_rel_tol = 1e-8;

namespace detail {

// Trapezoid coefficient (1/N) sum_j R_j e^{-i n t_j} over every stride-th sample.
inline complex cauchy_coefficient(std::span<const complex> samples, int n, std::size_t stride) {
  const std::size_t count = samples.size() / stride;
  std::vector<complex> terms(count);
  const std::size_t nn = static_cast<std::size_t>(n) % count;
  for (std::size_t j = 0; j < count; ++j) {
    // reduce j*n mod N exactly before forming the angle
    const double t = 2.0 * pi * double((j * nn) % count) / double(count);
    terms[j] = samples[j * stride] * std::polar(1.0, -t);
  }
  return pairwise_sum<complex>(terms) / double(count);
}

}  // namespace detail

/// R^(1..n_max)(z) from one shared set of circle samples; element k-1 holds R^(k).
/// Requires Re z > 0. Throws accuracy_error if some order has not converged at
/// cauchy_max_nodes nodes.
inline std::vector<Evaluation> derivatives_cauchy(int n_max, const HalfPlanePoint& z, const CauchyConfig& cfg = {}) {
  cfg.validate();
  if (n_max < 1) throw domain_error("derivatives_cauchy: need n >= 1");
  if (!(z.x() > 0.0)) throw domain_error("derivatives_cauchy: need Re z > 0 (circle must stay in H+)");

  const double x = z.x();
  const double y = std::abs(z.y());
  const double rho = cfg.radius_fraction * x;

  auto sample = [&](std::size_t j, std::size_t count) {
    const double t = 2.0 * pi * double(j) / double(count);
    const complex w = complex(x, y) + std::polar(rho, t);
    return inverse_mills(HalfPlanePoint(std::max(w.real(), 0.0), w.imag())).value - w;
  };

  std::size_t count = static_cast<std::size_t>(cfg.node_count);
  std::vector<complex> samples(count);
  for (std::size_t j = 0; j < count; ++j) samples[j] = sample(j, count);

  std::vector<Evaluation> out(static_cast<std::size_t>(n_max));
  while (true) {
    // R itself is rounded at eps |R| <= eps (|R - w| + |w|) before w is subtracted
    double max_abs = std::abs(z.z()) + rho;
    double max_sample = 0.0;
    for (const complex& s : samples) max_sample = std::max(max_sample, std::abs(s));
    max_abs += max_sample;

    bool all_converged = true;
    double scale = 1.0;  // n!/rho^n
    for (int n = 1; n <= n_max; ++n) {
      scale *= n / rho;
      const complex fine = detail::cauchy_coefficient(samples, n, 1) * scale;
      const complex coarse = detail::cauchy_coefficient(samples, n, 2) * scale;
      const double diff = std::abs(fine - coarse);
      // rounding of the samples, amplified by n!/rho^n, is below this
      const double noise = 128.0 * eps * max_abs * scale;
      const bool ok = diff <= std::max(cauchy_rel_tol * std::abs(fine), noise);
      all_converged = all_converged && ok;
      complex value = n == 1 ? fine + 1.0 : fine;
      if (z.y() == 0.0) value.imag(0.0);
      if (z.y() < 0.0) value = std::conj(value);
      out[static_cast<std::size_t>(n - 1)] = {value, std::max(diff, noise), Method::quadrature};
    }
    if (all_converged) return out;
    if (count >= static_cast<std::size_t>(cauchy_max_nodes))
      throw accuracy_error("derivative_cauchy: N and N/2 node results still differ at " +
                           std::to_string(cauchy_max_nodes) + " nodes");
    std::vector<complex> refined(2 * count);
    for (std::size_t j = 0; j < count; ++j) {
      refined[2 * j] = samples[j];
      refined[2 * j + 1] = sample(2 * j + 1, 2 * count);
    }
    samples = std::move(refined);
    count *= 2;
  }
}

/// R^(n)(z) by the Cauchy integral; abs_error_estimate is the N vs N/2 difference
/// (or the summation roundoff level, whichever is larger).
inline Evaluation derivative_cauchy(int n, const HalfPlanePoint& z, const CauchyConfig& cfg = {}) {
  if (n < 1) throw domain_error("derivative_cauchy: need n >= 1");
  return derivatives_cauchy(n, z, cfg).back();
}

/// |R^(n)(x) - [n = 1]| x^n / x for each real x; tends to 0 as x grows.
inline std::vector<double> vanishing_ratio(int n, std::span<const double> xs, const CauchyConfig& cfg = {}) {
  if (n < 1) throw domain_error("vanishing_ratio: need n >= 1");
  std::vector<double> out;
  out.reserve(xs.size());
  double prev = 0.0;
  for (const double x : xs) {
    if (!(x >= 1.0) || x <= prev) throw domain_error("vanishing_ratio: x_list must be increasing with every x >= 1");
    prev = x;
    const complex d = derivative_cauchy(n, HalfPlanePoint(x, 0.0), cfg).value;
    const double shifted = std::abs(d - (n == 1 ? 1.0 : 0.0));
    out.push_back(shifted * std::pow(x, n - 1));
  }
  return out;
}

}  // namespace mills
