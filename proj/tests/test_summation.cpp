#include "mills/summation.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

using namespace mills;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double R(double x) { return inverse_mills(HalfPlanePoint(x, 0.0)).value.real(); }

}  // namespace

TEST_CASE("request validation") {
  CHECK_THROWS_AS(sum_direct({0.0, 1.0, 3, 4}), domain_error);
  CHECK_THROWS_AS(sum_direct({1.0, -1.0, 3, 4}), domain_error);
  CHECK_THROWS_AS(sum_direct({1.0, 1.0, 0, 4}), domain_error);
  CHECK_THROWS_AS(sum_direct({1.0, 1.0, 3, 3}), domain_error);
  CHECK_THROWS_AS(sum_euler_maclaurin({20.0, 0.1, 100, 10}), domain_error);
}

TEST_CASE("direct sums") {
  const SumResult one = sum_direct({2.5, 0.1, 1, 4});
  CHECK(one.value == R(2.5));
  CHECK(one.terms_evaluated == 1);
  CHECK(one.remainder_bound == 0.0);
  // R(1) + R(1.5) + R(2) + R(2.5), each from a 50-digit erfc
  const double want = 1.525135276160981 + 1.938677166622543 + 2.373215532822841 + 2.822744797663907;
  CHECK_THAT(sum_direct({1.0, 0.5, 4, 4}).value, WithinRel(want, 1e-14));
}

TEST_CASE("direct sum against x + 1/x at large arguments") {
  // R(x) = x + 1/x - 2/x^3 + O(1/x^5)
  const SumRequest req{10.0, 0.01, 10000, 4};
  double lead = 0.0, slack = 0.0;
  for (std::int64_t i = 0; i < req.count; ++i) {
    const double x = req.x0 + double(i) * req.delta;
    lead += x + 1.0 / x;
    slack += 2.0 / (x * x * x);
  }
  const double v = sum_direct(req).value;
  CHECK(std::abs(v - lead) <= 1.1 * slack);
}

TEST_CASE("Euler-Maclaurin agrees with the direct sum within its bound") {
  const SumRequest req{20.0, 0.1, 1000, 4};
  const SumResult d = sum_direct(req), e = sum_euler_maclaurin(req);
  CHECK(std::abs(d.value - e.value) <= e.remainder_bound);
  CHECK(e.remainder_bound < 1e-6 * std::abs(d.value));
  CHECK(e.terms_evaluated < 10);
  CHECK(e.method == SumMethod::euler_maclaurin);

  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> X(10.0, 50.0), D(0.01, 0.5);
  std::uniform_int_distribution<int> N(100, 5000);
  for (int i = 0; i < 10; ++i) {
    const SumRequest r{X(rng), D(rng), N(rng), 4};
    const SumResult a = sum_direct(r), b = sum_euler_maclaurin(r);
    CAPTURE(r.x0, r.delta, r.count);
    CHECK(std::abs(a.value - b.value) <= b.remainder_bound);
    CHECK(b.remainder_bound < 1e-6 * std::abs(a.value));
  }
}

TEST_CASE("every order agrees with the direct sum") {
  for (int order : {2, 4, 6, 8}) {
    const SumRequest req{15.0, 0.2, 700, order};
    const SumResult d = sum_direct(req), e = sum_euler_maclaurin(req);
    CAPTURE(order);
    CHECK(std::abs(d.value - e.value) <= e.remainder_bound);
  }
}

TEST_CASE("remainder bound scaling") {
  const double b20 = sum_euler_maclaurin({20.0, 0.1, 1000, 4}).remainder_bound;
  const double b40 = sum_euler_maclaurin({40.0, 0.1, 1000, 4}).remainder_bound;
  // truncation part goes like x^{-(order-1)}: 2^3 = 8
  CHECK(b20 / b40 > 7.0);
  const double o2 = sum_euler_maclaurin({20.0, 0.1, 1000, 2}).remainder_bound;
  CHECK(b20 < o2);
}

TEST_CASE("too small x0 for the order is an overflow") {
  CHECK_THROWS_AS(sum_euler_maclaurin({0.01, 0.1, 1000, 8}), overflow_error);
}

TEST_CASE("a single term needs no corrections") {
  const SumResult e = sum_euler_maclaurin({3.0, 0.5, 1, 4});
  CHECK_THAT(e.value, WithinRel(R(3.0), 1e-15));
}
