#pragma once

// Surface tables of S over a rectangle: lines "x y value" with y varying
// fastest and a blank line between blocks of constant x.

#include "mills/errors.hpp"
#include "mills/gaussian_core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace mills {

enum class GridQuantity { absS, reS, imS };

inline std::string_view to_string(GridQuantity q) {
  switch (q) {
    case GridQuantity::absS: return "absS";
    case GridQuantity::reS: return "reS";
    case GridQuantity::imS: return "imS";
  }
  return "?";
}

inline std::optional<GridQuantity> parse_grid_quantity(std::string_view s) {
  if (s == "absS") return GridQuantity::absS;
  if (s == "reS") return GridQuantity::reS;
  if (s == "imS") return GridQuantity::imS;
  return std::nullopt;
}

struct GridSpec {
  double x_min = 0.0;
  double x_max = 8.0;
  double y_min = -8.0;
  double y_max = 8.0;
  int rows = 41;  // x values
  int cols = 41;  // y values

  void validate() const {
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) || !std::isfinite(y_max))
      throw domain_error("GridSpec: bounds must be finite");
    if (!(x_min >= 0.0)) throw domain_error("GridSpec: need x_min >= 0");
    if (!(x_min < x_max) || !(y_min < y_max)) throw domain_error("GridSpec: need x_min < x_max and y_min < y_max");
    if (rows < 2 || cols < 2) throw domain_error("GridSpec: rows and cols must be >= 2");
    if (double(rows) * double(cols) > 1e7) throw domain_error("GridSpec: rows * cols must not exceed 1e7");
  }

  // Points are placed from whichever end is nearer, so a range symmetric
  // about 0 gives exactly symmetric coordinates.
  static double node(double lo, double hi, int i, int n) {
    if (2 * i <= n - 1) return lo + (hi - lo) * double(i) / double(n - 1);
    return hi - (hi - lo) * double(n - 1 - i) / double(n - 1);
  }
  double x(int i) const { return node(x_min, x_max, i, rows); }
  double y(int j) const { return node(y_min, y_max, j, cols); }
};

/// The panels of the figure: absS and reS on [0,8]x[-8,8], imS on [0,16]x[-8,8], 41 x 41.
inline GridSpec default_grid(GridQuantity q) {
  GridSpec g;
  if (q == GridQuantity::imS) g.x_max = 16.0;
  return g;
}

inline double grid_value(GridQuantity q, double x, double y) {
  const complex v = S(HalfPlanePoint(x, y)).value;
  switch (q) {
    case GridQuantity::absS: return std::abs(v);
    case GridQuantity::reS: return v.real();
    case GridQuantity::imS: return v.imag();
  }
  return 0.0;
}

struct GridPoint {
  double x;
  double y;
  double value;
};

/// All rows*cols points in output order. Rows are distributed over `threads`
/// workers; each value depends only on its own point, so the result does not
/// depend on the thread count.
inline std::vector<GridPoint> compute_grid(const GridSpec& spec, GridQuantity q, unsigned threads = 1) {
  spec.validate();
  const auto cols = static_cast<std::size_t>(spec.cols);
  std::vector<GridPoint> out(static_cast<std::size_t>(spec.rows) * cols);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < spec.rows; i = next++) {
      const double x = spec.x(i);
      for (int j = 0; j < spec.cols; ++j) {
        const double y = spec.y(j);
        out[static_cast<std::size_t>(i) * cols + static_cast<std::size_t>(j)] = {x, y, grid_value(q, x, y)};
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(spec.rows)));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  return out;
}

inline std::string format_g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline void write_grid(std::ostream& os, const GridSpec& spec, GridQuantity q, const std::vector<GridPoint>& points,
                       bool header = false) {
  if (header) {
    os << "# quantity " << to_string(q) << "\n";
    os << "# x in [" << format_g17(spec.x_min) << ", " << format_g17(spec.x_max) << "], rows " << spec.rows << "\n";
    os << "# y in [" << format_g17(spec.y_min) << ", " << format_g17(spec.y_max) << "], cols " << spec.cols << "\n";
    os << "# columns: x y value\n";
  }
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k > 0 && k % static_cast<std::size_t>(spec.cols) == 0) os << "\n";
    const GridPoint& p = points[k];
    os << format_g17(p.x) << ' ' << format_g17(p.y) << ' ' << format_g17(p.value) << "\n";
  }
}

struct ParsedGrid {
  std::vector<std::vector<GridPoint>> blocks;  // one block per x value
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    return n;
  }
};

/// Reads a table written by write_grid; '#' lines are skipped. Throws
/// domain_error on a malformed line.
inline ParsedGrid read_grid(std::istream& is) {
  ParsedGrid out;
  bool new_block = true;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      new_block = true;
      continue;
    }
    std::istringstream ls(line);
    GridPoint p{};
    std::string extra;
    if (!(ls >> p.x >> p.y >> p.value) || (ls >> extra))
      throw domain_error("read_grid: malformed line " + std::to_string(lineno));
    if (new_block) out.blocks.emplace_back();
    new_block = false;
    out.blocks.back().push_back(p);
  }
  return out;
}

}  // namespace mills
