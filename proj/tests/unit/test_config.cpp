#include "common.hpp"
#include "sdwt/config.hpp"

using namespace sdwt;

TEST_SUITE("config") {
  TEST_CASE("defaults") {
    const RunConfig c = parse_config("");
    CHECK(c.fock.cutoff == 24);
    CHECK(c.fock.operator_cutoff == 12);
    CHECK(c.grid.alpha_count == 32);
    CHECK(c.sampling.build().size() == 8u * 8u * 24u * 8u * 8u * 16u);
  }

  TEST_CASE("file values then dotted overrides") {
    const RunConfig c = parse_config(R"({"seed": 7, "sampling": {"mu_count": 3}})",
                                     {"sampling.mu_count=5", "output_dir=runs/x",
                                      "wavelet.norm_beta=[0.5, 0.5]"});
    CHECK(c.seed == 7);
    CHECK(c.sampling.mu_count == 5);
    CHECK(c.output_dir == "runs/x");
    CHECK(c.wavelet.norm_beta == cplx{0.5, 0.5});
  }

  TEST_CASE("bare strings and plot slices") {
    const RunConfig c = parse_config("", {"plot.axis1=mu", "plot.fixed.b=0.25", "input=fixture:zero"});
    CHECK(c.plot.axis1 == "mu");
    CHECK(c.plot.fixed.at("b") == 0.25);
    CHECK(c.input == "fixture:zero");
  }

  TEST_CASE("bad input is rejected") {
    testing::expect_error(ErrorCode::InvalidArgument, [] { parse_config(R"({"grid": {"alpha_cnt": 3}})"); });
    testing::expect_error(ErrorCode::InvalidArgument, [] { parse_config("", {"nokey"}); });
    testing::expect_error(ErrorCode::InvalidArgument, [] { parse_config("", {"transform.method=spline"}); });
    testing::expect_error(ErrorCode::NotUnimodular, [] { parse_config("", {"kernel.A=2"}); });
    testing::expect_error(ErrorCode::InvalidArgument, [] { parse_config("{not json"); });
    testing::expect_error(ErrorCode::InvalidArgument, [] { parse_config("", {"fock.cutoff=\"many\""}); });
  }

  TEST_CASE("canonical text round-trips") {
    const RunConfig c = parse_config("", {"seed=99", "sampling.theta=0.1"});
    const std::string text = c.to_json();
    CHECK(parse_config(text).to_json() == text);
    CHECK(text.find("\"seed\": 99") != std::string::npos);
  }
}
