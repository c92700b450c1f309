#include "common.hpp"
#include "sdwt/config.hpp"
#include "sdwt/report.hpp"
#include "sdwt/suites.hpp"

using namespace sdwt;

TEST_SUITE("report") {
  TEST_CASE("overall pass is the conjunction of non-informational checks") {
    VerificationReport r;
    CheckRecord ok;
    ok.id = "x";
    ok.anchor = "a";
    ok.pass = true;
    CheckRecord info;
    info.id = "y";
    info.anchor = "b";
    info.informational = true;
    r.checks = {ok, info};
    CHECK(r.pass());
    CheckRecord bad = ok;
    bad.pass = false;
    r.checks.push_back(bad);
    CHECK_FALSE(r.pass());
  }

  TEST_CASE("runtime stays out of the report") {
    VerificationReport r;
    CheckRecord c;
    c.id = "x";
    c.anchor = "a";
    c.value = NAN;
    c.runtime_s = 1.5;
    r.checks = {c};
    const std::string a = r.to_json();
    r.checks[0].runtime_s = 9.0;
    CHECK(r.to_json() == a);
    CHECK(a.find("\"nan\"") != std::string::npos);
    CHECK(r.timing_json().find("9.0") != std::string::npos);
  }

  TEST_CASE("suite registry") {
    CHECK(is_suite("kernel"));
    CHECK_FALSE(is_suite("nope"));
    const auto all = suite_checks("all");
    CHECK(all.front() == "A3");
    CHECK(std::find(all.begin(), all.end(), "A14") == all.end());
    CHECK(suite_checks("kernel") == std::vector<std::string>{"A12", "A13", "kernel-composition"});
    testing::expect_error(ErrorCode::InvalidArgument, [] { run_check("A99", parse_config("")); });
  }

  TEST_CASE("kernel suite passes with anchors and the seed") {
    const RunConfig c = parse_config("", {"seed=5"});
    const VerificationReport r = run_suite("kernel", c);
    CHECK(r.pass());
    CHECK(r.seed == 5);
    for (const auto& rec : r.checks) CHECK_FALSE(rec.anchor.empty());
    CHECK(r.to_json().find("\"seed\": 5") != std::string::npos);
  }

  TEST_CASE("module failures become failing records") {
    const RunConfig c = parse_config("", {"kernel.A=1", "kernel.B=0", "kernel.C=0", "kernel.D=1"});
    const auto recs = run_check("kernel-composition", c);
    REQUIRE(recs.size() == 1);
    CHECK_FALSE(recs[0].pass);
    CHECK(recs[0].note.find("ZeroB") != std::string::npos);
  }
}
