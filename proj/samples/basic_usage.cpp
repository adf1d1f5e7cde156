// Evaluate R and S at a few points, one derivative and the extremal constants.

#include "mills/mills.hpp"

#include <cstdio>

int main() {
  using namespace mills;
  for (const auto& [x, y] : {std::pair{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.6267}, {2.0, -3.0}}) {
    const HalfPlanePoint z(x, y);
    const complex R = inverse_mills(z).value;
    std::printf("z = %5.2f%+6.2fi  R = %.12f%+.12fi  |S| = %.12f\n", x, y, R.real(), R.imag(), std::abs(S(z).value));
  }
  const Evaluation d = derivative_cauchy(3, HalfPlanePoint(1.0, 1.0));
  std::printf("R'''(1+i) = %.10f%+.10fi  (bound %.4g)\n", d.value.real(), d.value.imag(), derivative_bound(3, HalfPlanePoint(1.0, 1.0)));
  const ExtremalConstants c = extremal_constants();
  std::printf("y* = %.12f  |S(iy*)| = %.12f  x* = %.12f\n", c.y_star, c.s_at_y_star, c.x_star);
}
