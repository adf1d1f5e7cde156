#include "mills/grid.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace mills;

TEST_CASE("grid spec validation") {
  GridSpec g;
  CHECK_NOTHROW(g.validate());
  g.x_min = -1.0;
  CHECK_THROWS_AS(g.validate(), domain_error);
  g = GridSpec{};
  g.rows = 1;
  CHECK_THROWS_AS(g.validate(), domain_error);
  g = GridSpec{};
  g.y_min = 9.0;
  CHECK_THROWS_AS(g.validate(), domain_error);
  g = GridSpec{};
  g.rows = 10000;
  g.cols = 10000;
  CHECK_THROWS_AS(g.validate(), domain_error);
}

TEST_CASE("nodes hit the end points and are symmetric") {
  const GridSpec g;
  CHECK(g.x(0) == 0.0);
  CHECK(g.x(40) == 8.0);
  CHECK(g.y(20) == 0.0);
  for (int j = 0; j < 41; ++j) CHECK(g.y(j) == -g.y(40 - j));
  CHECK(default_grid(GridQuantity::imS).x_max == 16.0);
  CHECK(default_grid(GridQuantity::reS).x_max == 8.0);
}

TEST_CASE("default absS table") {
  const GridSpec spec = default_grid(GridQuantity::absS);
  const auto pts = compute_grid(spec, GridQuantity::absS);
  REQUIRE(pts.size() == 41u * 41u);
  double lo = 2.0, hi = 0.0;
  std::size_t at = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (pts[k].value < lo) lo = pts[k].value, at = k;
    hi = std::max(hi, pts[k].value);
  }
  CHECK(lo > 0.686);
  CHECK(lo < 0.687);
  CHECK(pts[at].x == 0.0);
  CHECK(std::abs(std::abs(pts[at].y) - 1.6) < 1e-12);
  CHECK(hi <= 1.0 + 1e-12);
  CHECK(pts[20].value == 1.0);  // (0, 0)
}

TEST_CASE("imS is antisymmetric and reS symmetric in y") {
  for (GridQuantity q : {GridQuantity::imS, GridQuantity::reS}) {
    const GridSpec spec = default_grid(q);
    const auto pts = compute_grid(spec, q, 3);
    const double sign = q == GridQuantity::imS ? -1.0 : 1.0;
    for (int i = 0; i < spec.rows; ++i)
      for (int j = 0; j < spec.cols; ++j) {
        const auto& a = pts[static_cast<std::size_t>(i * spec.cols + j)];
        const auto& b = pts[static_cast<std::size_t>(i * spec.cols + spec.cols - 1 - j)];
        CHECK(a.value == sign * b.value);
      }
  }
}

TEST_CASE("thread count does not change the table") {
  const GridSpec spec{0.0, 4.0, -3.0, 3.0, 13, 9};
  const auto one = compute_grid(spec, GridQuantity::reS, 1);
  const auto four = compute_grid(spec, GridQuantity::reS, 4);
  for (std::size_t k = 0; k < one.size(); ++k) CHECK(one[k].value == four[k].value);
}

TEST_CASE("write and read round trip") {
  const GridSpec spec{0.0, 2.0, -1.0, 1.0, 5, 7};
  const auto pts = compute_grid(spec, GridQuantity::absS);
  for (bool header : {false, true}) {
    std::stringstream ss;
    write_grid(ss, spec, GridQuantity::absS, pts, header);
    const std::string text = ss.str();
    CHECK((text.front() == '#') == header);
    const ParsedGrid back = read_grid(ss);
    REQUIRE(back.blocks.size() == 5);
    REQUIRE(back.size() == pts.size());
    std::size_t k = 0;
    for (const auto& block : back.blocks) {
      REQUIRE(block.size() == 7);
      for (const auto& p : block) {
        CHECK(p.x == pts[k].x);
        CHECK(p.y == pts[k].y);
        CHECK(p.value == pts[k].value);
        ++k;
      }
    }
  }
  std::stringstream bad("0 1\n");
  CHECK_THROWS_AS(read_grid(bad), domain_error);
}

TEST_CASE("quantity names") {
  CHECK(parse_grid_quantity("imS") == GridQuantity::imS);
  CHECK_FALSE(parse_grid_quantity("abs").has_value());
  CHECK(to_string(GridQuantity::reS) == "reS");
}
