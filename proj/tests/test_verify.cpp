#include "mills/verify.hpp"

#include <catch_amalgamated.hpp>

using namespace mills;

TEST_CASE("quick verification passes") {
  const VerificationSummary s = run_verification({VerifyLevel::quick, 1, 1});
  for (const auto& f : s.failures) UNSCOPED_INFO(f.check << " at " << f.point << ": " << f.detail);
  CHECK(s.ok());
  CHECK(s.suites.size() >= 12);
  CHECK(s.checks_run > 1000);
}

TEST_CASE("full verification passes and enumerates at least 12 suites") {
  const VerificationSummary s = run_verification({VerifyLevel::full, 7, 2});
  for (const auto& f : s.failures) UNSCOPED_INFO(f.check << " at " << f.point << ": " << f.detail);
  CHECK(s.ok());
  CHECK(s.suites.size() >= 12);
  CHECK(verification_suite_names().size() == s.suites.size());
}

TEST_CASE("a wrong band floor is caught") {
  VerifyOptions opt;
  opt.band_floor = 0.7;
  const VerificationSummary s = run_verification(opt);
  CHECK_FALSE(s.ok());
  bool named = false;
  for (const auto& f : s.failures) named = named || f.check.rfind("s_band/", 0) == 0;
  CHECK(named);
  CHECK_FALSE(s.failures.front().point.empty());
  CHECK_FALSE(s.failures.front().detail.empty());
}

TEST_CASE("results do not depend on the thread count") {
  const VerificationSummary a = run_verification({VerifyLevel::quick, 5, 1});
  const VerificationSummary b = run_verification({VerifyLevel::quick, 5, 4});
  REQUIRE(a.suites.size() == b.suites.size());
  for (std::size_t i = 0; i < a.suites.size(); ++i) {
    CHECK(a.suites[i].name == b.suites[i].name);
    CHECK(a.suites[i].checks == b.suites[i].checks);
  }
}
