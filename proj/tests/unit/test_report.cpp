#include "doctest.h"
#include "qaffine/errors.hpp"
#include "qaffine/suites.hpp"

using namespace qaffine;

TEST_CASE("report verdict and ordering") {
  std::vector<Case> cases = {
      {"b", [] { return CaseOutcome::ok(); }},
      {"a", [] { return CaseOutcome::fail("x"); }, true},
      {"c", []() -> CaseOutcome { throw PreconditionError("boom"); }},
  };
  const Report r = runSerial("demo", cases);
  REQUIRE(r.cases.size() == 3);
  CHECK(r.cases[0].id == "a");
  CHECK(r.cases[2].id == "c");
  CHECK(r.failures() == 1);
  CHECK_FALSE(r.pass());
  CHECK(r.cases[2].residual->find("boom") != std::string::npos);
  cases.pop_back();
  CHECK(runParallel("demo", cases).pass());
}

TEST_CASE("report JSON round trip") {
  Report r;
  r.suite = "demo";
  r.cases = {{"x", true, std::nullopt, false, 1.5}, {"y", false, std::string("a - c"), false, 2}};
  const Report back = Report::fromJson(r.toJson());
  CHECK(back.suite == "demo");
  REQUIRE(back.cases.size() == 2);
  CHECK_FALSE(back.cases[0].residual);
  CHECK(*back.cases[1].residual == "a - c");
  CHECK(back.toJson() == r.toJson());
  CHECK_THROWS_AS(Report::fromJson("{"), ParseError);
  CHECK_THROWS_AS(Report::fromJson("{\"schema\": 2}"), PreconditionError);
}

TEST_CASE("parallel and serial runs agree") {
  for (const char* id : {"AC1", "AC9"}) {
    const Suite s = suitesFor(id).front();
    const Report p = runSuite(s, RunMode::Parallel);
    const Report q = runSuite(s, RunMode::Serial);
    REQUIRE(p.cases.size() == q.cases.size());
    for (std::size_t i = 0; i < p.cases.size(); ++i) {
      CHECK(p.cases[i].id == q.cases[i].id);
      CHECK(p.cases[i].pass == q.cases[i].pass);
    }
  }
  CHECK(suitesFor("connection").size() == 2);
  CHECK(suitesFor("all").size() == 9);
  CHECK_THROWS_AS(suitesFor("nope"), PreconditionError);
}
