#include <doctest.h>

#include <json.hpp>
#include <set>

#include "flagoct/errors.hpp"
#include "flagoct/suites.hpp"

using namespace flagoct;

TEST_SUITE("cli") {
  TEST_CASE("suite names") {
    CHECK(is_suite_name("all"));
    CHECK(is_suite_name("ktheory"));
    CHECK_FALSE(is_suite_name("nosuch"));
    CHECK_THROWS_AS(run_suite("nosuch"), PreconditionError);
  }

  TEST_CASE("reports are deterministic for a seed") {
    SuiteOptions options;
    options.seed = 99;
    const VerificationReport a = run_suite("octonion", options), b = run_suite("octonion", options);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].id == b.checks[i].id);
      CHECK(a.checks[i].status == b.checks[i].status);
      CHECK(a.checks[i].details == b.checks[i].details);
    }
    CHECK(a.seed == 99);
  }

  TEST_CASE("text and json carry the same checks") {
    const VerificationReport r = run_suite("roots");
    const auto doc = nlohmann::json::parse(r.to_json());
    CHECK(doc["suite"] == "roots");
    std::set<std::string> from_json;
    for (const auto& c : doc["checks"]) {
      from_json.insert(c["id"].get<std::string>());
      CHECK(c.contains("anchor"));
      CHECK(!c["anchor"].get<std::string>().empty());
    }
    const std::string text = r.to_text();
    CHECK(from_json.size() == r.checks.size());
    for (const auto& id : from_json) CHECK(text.find(id) != std::string::npos);
    const Summary s = r.summary();
    CHECK(doc["summary"]["pass"] == s.pass);
    CHECK(doc["summary"]["fail"] == s.fail);
    CHECK(s.pass + s.fail + s.skipped == r.checks.size());
  }

  TEST_CASE("checks are sorted by id") {
    const VerificationReport r = run_suite("gkm");
    for (std::size_t i = 1; i < r.checks.size(); ++i) CHECK(r.checks[i - 1].id < r.checks[i].id);
    CHECK(r.find("gkm.free-rank") != nullptr);
  }

  TEST_CASE("named checks from the cohomology and ktheory suites") {
    const VerificationReport coh = run_suite("cohomology");
    REQUIRE(coh.find("frac-identity") != nullptr);
    REQUIRE(coh.find("frac-identity.swapped") != nullptr);
    CHECK(coh.find("frac-identity.swapped")->passed());
    const VerificationReport k = run_suite("ktheory");
    REQUIRE(k.find("X1-X2-factorization") != nullptr);
    CHECK(k.find("X1-X2-factorization")->passed());
  }

  TEST_CASE("table fixtures") {
    const std::string published =
        R"({"E1":["b1","-b1","b3","b2","-b3","-b2"],"E2":["b2","b3","-b2","-b3","b1","-b1"],"E3":["b3","b2","b1","-b1","-b2","-b3"]})";
    const RestrictionTable t = parse_table_fixture(published);
    for (const auto& s : Sigma3Element::all())
      for (int k = 1; k <= 3; ++k) CHECK(t.raw(s, k) == RestrictionTable::published().raw(s, k));
    CHECK_THROWS(parse_table_fixture(R"({"E1":["b1"]})"));
    CHECK_THROWS(parse_table_fixture("not json"));
  }

  TEST_CASE("corrupted table is caught by the gkm and cohomology suites") {
    SuiteOptions options;
    options.table = corrupted_table();
    CHECK_FALSE(run_suite("gkm", options).all_passed());
    CHECK_FALSE(run_suite("cohomology", options).all_passed());
  }

  TEST_CASE("each suite contains a falsified fixture that is rejected") {
    for (const auto& name : suite_names()) {
      if (name == "all") continue;
      const VerificationReport r = run_suite(name);
      bool has_control = false;
      for (const auto& c : r.checks)
        if (c.id.find("control") != std::string::npos) {
          has_control = true;
          CHECK_MESSAGE(c.passed(), c.id);
        }
      CHECK_MESSAGE(has_control, name);
    }
  }
}
