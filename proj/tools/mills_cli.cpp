// mills: command-line front end.
//
//   mills eval --z X,Y [--q R|S|r|phi|tail]
//   mills grid [--quantity absS|reS|imS] [--x-min ..] [--rows N] [--output FILE] [--header]
//   mills constants [--format text|json]
//   mills verify [--level quick|full] [--seed N] [--threads N]
//   mills deriv --n N --z X,Y
//   mills sum --x0 X --delta D --N N [--order 2|4|6|8] [--method direct|em|both]
//
// Exit status: 0 success, 1 verification or accuracy failure, 2 usage or domain error.

#include "mills/mills.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <string_view>
#include <thread>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

using mills::format_g17;

std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

// "x,y" -> point of the closed right half-plane
mills::HalfPlanePoint parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw mills::domain_error("expected --z x,y, got '" + text + "'");
  const auto x = parse_double(std::string_view(text).substr(0, comma));
  const auto y = parse_double(std::string_view(text).substr(comma + 1));
  if (!x || !y) throw mills::domain_error("cannot parse '" + text + "' as x,y");
  return mills::HalfPlanePoint(*x, *y);
}

std::string line(std::initializer_list<std::string> fields) {
  std::string out;
  for (const auto& f : fields) {
    if (!out.empty()) out += ' ';
    out += f;
  }
  return out;
}

int cmd_eval(const std::string& z_text, const std::string& q) {
  const mills::HalfPlanePoint z = parse_point(z_text);
  mills::complex value;
  double err = 0.0;
  std::string method;
  if (q == "phi") {
    value = mills::phi(z.z());
    err = 4.0 * mills::eps * (1.0 + std::norm(z.z())) * std::abs(value);
    method = "exp";
  } else {
    mills::Evaluation e;
    if (q == "R") e = mills::inverse_mills(z);
    else if (q == "S") e = mills::S(z);
    else if (q == "r") e = mills::mills_ratio(z);
    else e = mills::gaussian_tail(z);
    value = e.value;
    err = e.abs_error_estimate;
    method = std::string(mills::to_string(e.method));
  }
  std::cout << line({q, format_g17(value.real()), format_g17(value.imag()), format_g17(std::abs(value)), format_g17(err), method})
            << "\n";
  return exit_ok;
}

struct GridArgs {
  std::string quantity = "absS";
  std::optional<double> x_min, x_max, y_min, y_max;
  int rows = 41;
  int cols = 41;
  std::string output = "-";
  bool header = false;
  unsigned threads = 0;
};

int cmd_grid(const GridArgs& a) {
  const auto q = mills::parse_grid_quantity(a.quantity);
  if (!q) throw mills::domain_error("unknown grid quantity '" + a.quantity + "'");
  mills::GridSpec spec = mills::default_grid(*q);
  spec.x_min = a.x_min.value_or(spec.x_min);
  spec.x_max = a.x_max.value_or(spec.x_max);
  spec.y_min = a.y_min.value_or(spec.y_min);
  spec.y_max = a.y_max.value_or(spec.y_max);
  spec.rows = a.rows;
  spec.cols = a.cols;
  spec.validate();

  std::ofstream file;
  if (a.output != "-") {
    file.open(a.output);
    if (!file) {
      std::cerr << "mills grid: cannot write '" << a.output << "'\n";
      return exit_usage;
    }
  }
  std::ostream& os = a.output == "-" ? std::cout : file;
  const unsigned threads = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  mills::write_grid(os, spec, *q, mills::compute_grid(spec, *q, threads), a.header);
  os.flush();
  if (!os) {
    std::cerr << "mills grid: write to '" << a.output << "' failed\n";
    return exit_usage;
  }
  return exit_ok;
}

int cmd_constants(const std::string& format) {
  const mills::ExtremalConstants c = mills::extremal_constants();
  if (format == "json") {
    nlohmann::ordered_json j;
    j["y_star"] = c.y_star;
    j["s_at_y_star"] = c.s_at_y_star;
    j["x_star"] = c.x_star;
    j["x_star_closed_form"] = "(pi-1)*sqrt(2/pi)";
    j["S_at_x_star"] = c.S_at_x_star;
    j["y21"] = c.y21;
    j["y22"] = c.y22;
    j["brackets"] = {{"y_star", {c.y_star_bracket.lo, c.y_star_bracket.hi}},
                     {"y21", {c.y21_bracket.lo, c.y21_bracket.hi}},
                     {"y22", {c.y22_bracket.lo, c.y22_bracket.hi}}};
    std::cout << j.dump(2) << "\n";
    return exit_ok;
  }
  auto bracket = [](const mills::Bracket& b) { return "[" + format_g17(b.lo) + ", " + format_g17(b.hi) + "]"; };
  std::cout << "y_star       " << format_g17(c.y_star) << "  bracket " << bracket(c.y_star_bracket) << "\n"
            << "s_at_y_star  " << format_g17(c.s_at_y_star) << "  (|S(i y_star)|)\n"
            << "x_star       " << format_g17(c.x_star) << "  = (pi-1)*sqrt(2/pi)\n"
            << "S_at_x_star  " << format_g17(c.S_at_x_star) << "\n"
            << "y21          " << format_g17(c.y21) << "  bracket " << bracket(c.y21_bracket) << "\n"
            << "y22          " << format_g17(c.y22) << "  bracket " << bracket(c.y22_bracket) << "\n";
  return exit_ok;
}

int cmd_verify(const std::string& level, std::uint64_t seed, unsigned threads, std::optional<double> band_floor) {
  mills::VerifyOptions opt;
  if (level == "full") opt.level = mills::VerifyLevel::full;
  else if (level != "quick") throw mills::domain_error("--level must be quick or full");
  opt.seed = seed;
  opt.threads = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  if (band_floor) opt.band_floor = *band_floor;

  const mills::VerificationSummary sum = mills::run_verification(opt);
  for (const auto& s : sum.suites) {
    std::printf("%-30s %7zu checks  %s\n", s.name.c_str(), s.checks,
                s.failures.empty() ? "ok" : (std::to_string(s.failures.size()) + " FAILED").c_str());
  }
  for (const auto& f : sum.failures) std::printf("FAIL %s at %s: %s\n", f.check.c_str(), f.point.c_str(), f.detail.c_str());
  std::printf("%zu suites, %zu checks, %zu failures, %.3g s\n", sum.suites.size(), sum.checks_run, sum.failures.size(),
              sum.wall_time);
  return sum.ok() ? exit_ok : exit_failure;
}

int cmd_deriv(int n, const std::string& z_text, double radius_fraction, int nodes) {
  const mills::HalfPlanePoint z = parse_point(z_text);
  mills::CauchyConfig cfg;
  cfg.radius_fraction = radius_fraction;
  cfg.node_count = nodes;
  const mills::Evaluation d = mills::derivative_cauchy(n, z, cfg);
  const double bound = mills::derivative_bound(n, z);
  const bool ok = std::abs(d.value) <= bound;
  std::cout << line({std::to_string(n), format_g17(d.value.real()), format_g17(d.value.imag()), format_g17(d.abs_error_estimate),
                     format_g17(bound), ok ? "bound_respected" : "BOUND_VIOLATED"})
            << "\n";
  return ok ? exit_ok : exit_failure;
}

struct SumArgs {
  double x0 = 0.0;
  double delta = 0.0;
  std::int64_t count = 0;
  int order = 4;
  std::string method = "direct";
  double tol = 1e-6;
};

void print_sum(const mills::SumResult& r) {
  std::cout << line({std::string(mills::to_string(r.method)), format_g17(r.value), format_g17(r.remainder_bound),
                     std::to_string(r.terms_evaluated)})
            << "\n";
}

int cmd_sum(const SumArgs& a) {
  const mills::SumRequest req{a.x0, a.delta, a.count, a.order};
  req.validate();
  if (a.method != "direct" && a.method != "em" && a.method != "both")
    throw mills::domain_error("--method must be direct, em or both");

  std::optional<mills::SumResult> em;
  if (a.method != "direct") {
    try {
      em = mills::sum_euler_maclaurin(req);
      if (em->remainder_bound > a.tol * std::abs(em->value))
        std::cerr << "warning: remainder bound " << format_g17(em->remainder_bound) << " exceeds tolerance "
                  << format_g17(a.tol) << " relative to the sum\n";
    } catch (const mills::overflow_error& e) {
      std::cerr << "warning: " << e.what() << "; using the direct sum\n";
    }
  }
  std::optional<mills::SumResult> direct;
  if (a.method != "em" || !em) direct = mills::sum_direct(req);

  if (direct) print_sum(*direct);
  if (em) print_sum(*em);
  if (direct && em) std::cout << "discrepancy " << format_g17(std::abs(direct->value - em->value)) << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse Mills ratio on the right half-plane"};
  app.require_subcommand(1);

  std::string z_text;
  std::string quantity = "R";
  auto* eval = app.add_subcommand("eval", "evaluate R, S, r, phi or the Gaussian tail at one point");
  eval->add_option("--z", z_text, "point as x,y (x >= 0)")->required();
  eval->add_option("--q", quantity, "quantity")->check(CLI::IsMember({"R", "S", "r", "phi", "tail"}));

  GridArgs grid_args;
  auto* grid = app.add_subcommand("grid", "write a surface table of |S|, Re S or Im S");
  grid->add_option("--quantity", grid_args.quantity, "absS, reS or imS")->check(CLI::IsMember({"absS", "reS", "imS"}));
  grid->add_option("--x-min", grid_args.x_min);
  grid->add_option("--x-max", grid_args.x_max);
  grid->add_option("--y-min", grid_args.y_min);
  grid->add_option("--y-max", grid_args.y_max);
  grid->add_option("--rows", grid_args.rows, "number of x values");
  grid->add_option("--cols", grid_args.cols, "number of y values");
  grid->add_option("--output,-o", grid_args.output, "output file, - for stdout");
  grid->add_flag("--header", grid_args.header, "prefix the table with # comment lines");
  grid->add_option("--threads", grid_args.threads, "worker threads, 0 for all cores");

  std::string format = "text";
  auto* constants = app.add_subcommand("constants", "report the extremal constants");
  constants->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string level = "quick";
  std::uint64_t seed = 1;
  unsigned verify_threads = 0;
  std::optional<double> band_floor;
  auto* verify = app.add_subcommand("verify", "run the self-verification suites");
  verify->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--seed", seed);
  verify->add_option("--threads", verify_threads, "worker threads, 0 for all cores");
  verify->add_option("--band-floor", band_floor, "override the |S| floor (harness self-test)");

  int n = 1;
  double radius_fraction = 0.5;
  int nodes = 256;
  auto* deriv = app.add_subcommand("deriv", "n-th derivative of R by the Cauchy integral");
  deriv->add_option("--n", n)->required();
  deriv->add_option("--z", z_text, "point as x,y (x > 0)")->required();
  deriv->add_option("--radius-fraction", radius_fraction);
  deriv->add_option("--nodes", nodes);

  SumArgs sum_args;
  auto* sum = app.add_subcommand("sum", "sum R(x0 + i delta) for i = 0..N-1");
  sum->add_option("--x0", sum_args.x0)->required();
  sum->add_option("--delta", sum_args.delta)->required();
  sum->add_option("--N", sum_args.count)->required();
  sum->add_option("--order", sum_args.order);
  sum->add_option("--method", sum_args.method)->check(CLI::IsMember({"direct", "em", "both"}));
  sum->add_option("--tol", sum_args.tol, "relative tolerance for the remainder-bound warning");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*eval) return cmd_eval(z_text, quantity);
    if (*grid) return cmd_grid(grid_args);
    if (*constants) return cmd_constants(format);
    if (*verify) return cmd_verify(level, seed, verify_threads, band_floor);
    if (*deriv) return cmd_deriv(n, z_text, radius_fraction, nodes);
    if (*sum) return cmd_sum(sum_args);
  } catch (const mills::domain_error& e) {
    std::cerr << "mills: " << e.what() << "\n";
    return exit_usage;
  } catch (const mills::overflow_error& e) {
    std::cerr << "mills: " << e.what() << "\n";
    return exit_usage;
  } catch (const mills::accuracy_error& e) {
    std::cerr << "mills: " << e.what() << "\n";
    return exit_failure;
  }
  return exit_usage;
}
