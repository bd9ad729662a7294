#include <doctest.h>

#include "gmult/verify/verify.hpp"

using namespace gmult;
using namespace gmult::verify;

TEST_SUITE("verify") {

TEST_CASE("A1 suite passes and is deterministic") {
  auto rs = rootsys::RootSystem::build("A1");
  SuiteConfig cfg;
  cfg.hecke_samples = 10;
  cfg.unitarity_pairs = 5;
  auto a = run_suite(*rs, cfg);
  CHECK(a.label == "A1");
  CHECK(a.passed());
  CHECK(a.checks.size() > 20);
  auto b = run_suite(*rs, cfg);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].detail == b.checks[i].detail);
  }
}

TEST_CASE("skips are confined to empty domains") {
  auto rs = rootsys::RootSystem::build("A2");
  SuiteConfig cfg;
  cfg.include_gm = false;
  cfg.hecke_samples = 5;
  cfg.unitarity_pairs = 5;
  for (const auto& r : run_suite(*rs, cfg).checks) {
    CAPTURE(r.name);
    CHECK(r.passed);
    if (r.skipped) CHECK(r.detail.find("simply laced") != std::string::npos);
  }
}

TEST_CASE("run_suites keeps input order") {
  SuiteConfig cfg;
  cfg.include_gm = false;
  cfg.hecke_samples = 5;
  cfg.unitarity_pairs = 5;
  auto rs = run_suites({"B2", "A1"}, cfg, 2);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].label == "B2");
  CHECK(rs[1].label == "A1");
  CHECK(rs[0].passed());
}

}  // TEST_SUITE
