#include <doctest.h>

#include <json.hpp>

#include "bernoulli/errors.hpp"
#include "bernoulli/verify.hpp"

using namespace bern;

TEST_CASE("exact suites pass") {
  VerifyOptions o;
  o.max_n = 20;
  for (const char* s : {"core", "vonstaudt"}) {
    const SuiteReport r = run_suite(s, o);
    CHECK_MESSAGE(r.passed(), r.to_pretty());
    CHECK(!r.checks.empty());
  }
}

TEST_CASE("report serialization") {
  VerifyOptions o;
  o.max_n = 5;
  const SuiteReport r = run_suite("vonstaudt", o);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["suite"] == "vonstaudt");
  CHECK(j["status"] == "pass");
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c["status"] == "pass");
    CHECK(c.contains("margin"));
  }
  CHECK(r.to_csv().rfind("suite,name,status,margin,covers\n", 0) == 0);
  CHECK(r.to_pretty().rfind("PASS vonstaudt/", 0) == 0);
  // identical runs give identical bytes
  CHECK(run_suite("vonstaudt", o).to_json() == r.to_json());
}

TEST_CASE("bad arguments") {
  CHECK_THROWS_AS(run_suite("nonsense", VerifyOptions{}), Error);
  VerifyOptions o;
  o.prec = 10;
  CHECK_THROWS_AS(run_suite("core", o), Error);
}
