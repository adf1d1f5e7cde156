#pragma once

// Shared numerical plumbing: adaptive quadrature and order-stable summation.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <vector>

namespace mills {

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> gk21_nodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> gk21_kronrod_weights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208707035840, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for nodes 1, 3, 5, 7, 9
inline constexpr std::array<double, 5> gk21_gauss_weights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a, b, value, error;
  bool at_roundoff;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class F>
Panel gk21_panel(F& f, double a, double b) {
  constexpr double epmach = std::numeric_limits<double>::epsilon();
  constexpr double uflow = std::numeric_limits<double>::min();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 21> fv{};
  for (std::size_t j = 0; j < 10; ++j) {
    const double dx = half * gk21_nodes[j];
    fv[2 * j] = f(center - dx);
    fv[2 * j + 1] = f(center + dx);
  }
  fv[20] = f(center);
  double resk = fv[20] * gk21_kronrod_weights[10];
  double resg = 0.0;
  double resabs = std::abs(resk);
  for (std::size_t j = 0; j < 10; ++j) {
    const double pair = fv[2 * j] + fv[2 * j + 1];
    resk += gk21_kronrod_weights[j] * pair;
    resabs += gk21_kronrod_weights[j] * (std::abs(fv[2 * j]) + std::abs(fv[2 * j + 1]));
    if (j % 2 == 1) resg += gk21_gauss_weights[j / 2] * pair;
  }
  const double reskh = 0.5 * resk;
  double resasc = gk21_kronrod_weights[10] * std::abs(fv[20] - reskh);
  for (std::size_t j = 0; j < 10; ++j)
    resasc += gk21_kronrod_weights[j] * (std::abs(fv[2 * j] - reskh) + std::abs(fv[2 * j + 1] - reskh));
  const double hl = std::abs(half);
  resabs *= hl;
  resasc *= hl;
  double err = std::abs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  bool roundoff = false;
  if (resabs > uflow / (50.0 * epmach) && err <= 50.0 * epmach * resabs) {
    err = 50.0 * epmach * resabs;
    roundoff = true;
  }
  return {a, b, resk * half, err, roundoff};
}

}  // namespace detail

// Globally adaptive 21-point Gauss-Kronrod on a finite interval (QUADPACK
// qag strategy): bisect the panel with the largest error estimate until the
// summed estimate is below max(abs_tol, rel_tol * |value|). Panels whose
// estimate has reached the roundoff floor are not split further.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double rel_tol = 1e-13, double abs_tol = 0.0,
                           std::size_t max_panels = 4000) {
  std::priority_queue<detail::Panel> open;
  std::vector<detail::Panel> done;
  const detail::Panel first = detail::gk21_panel(f, a, b);
  double value = first.value, error = first.error;
  if (first.at_roundoff) done.push_back(first); else open.push(first);
  std::size_t count = 1;
  while (!open.empty() && error > std::max(abs_tol, rel_tol * std::abs(value)) && count < max_panels) {
    const detail::Panel p = open.top();
    open.pop();
    const double mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) {
      done.push_back(p);
      continue;
    }
    const detail::Panel left = detail::gk21_panel(f, p.a, mid);
    const detail::Panel right = detail::gk21_panel(f, mid, p.b);
    value += left.value + right.value - p.value;
    error += left.error + right.error - p.error;
    for (const auto& q : {left, right}) {
      if (q.at_roundoff) done.push_back(q); else open.push(q);
    }
    ++count;
  }
  // re-add in a fixed order so the result does not carry the running-sum drift
  std::vector<detail::Panel> all = std::move(done);
  while (!open.empty()) {
    all.push_back(open.top());
    open.pop();
  }
  std::sort(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
  QuadratureResult out;
  for (const auto& q : all) {
    out.value += q.value;
    out.error += q.error;
  }
  return out;
}

// Pairwise (cascade) summation. The split points depend only on the length,
// so the result is independent of how the caller chunks the work.
template <class T>
T pairwise_sum(std::span<const T> v) {
  if (v.empty()) return T{};
  if (v.size() <= 8) {
    T s{};
    for (const T& t : v) s += t;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

// e^{-y^2/2} with y^2 split exactly into head + tail, so the result keeps full
// relative accuracy for large y.
inline double exp_neg_half_square(double y) {
  const double sq = y * y;
  const double tail = std::fma(y, y, -sq);
  return std::exp(-0.5 * sq) * (1.0 - 0.5 * tail);
}

}  // namespace mills
