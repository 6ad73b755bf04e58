#include <gtest/gtest.h>

#include "qweyl/cli.hpp"

using namespace qweyl;
using cli::run_command_safely;

namespace {

InstanceConfig plane_config() {
  return config_from_string(R"({"n": 1, "r": 1, "q_exponents": [[1]], "lambda_exponents": [[[0]]]})");
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST(Config, DefaultInstance) {
  const auto cfg = default_config();
  EXPECT_EQ(cfg.params.n(), 3u);
  EXPECT_EQ(cfg.params.rank(), 2u);
  EXPECT_EQ(cfg.params.lexp(2, 3), (ExpVec{1, -1}));
  EXPECT_EQ(cfg.params.lexp(3, 2), (ExpVec{-1, 1}));
  ASSERT_TRUE(cfg.concrete);
  EXPECT_EQ(cfg.concrete->mu[1], Rational(1, 2));
}

TEST(Config, StringIntegersAndRationals) {
  const auto cfg = config_from_string(R"({"n": "2", "r": "1", "q_exponents": [["1"], [2]],
    "lambda_exponents": [[[0, "-1"], [1, 0]]], "concrete": {"q": "3/2", "eta": ["5"], "mu": [1]}, "seed": "9"})");
  EXPECT_EQ(cfg.params.qexp(2), (ExpVec{2}));
  EXPECT_EQ(cfg.params.lexp(1, 2), (ExpVec{-1}));
  EXPECT_EQ(cfg.concrete->q, Rational(3, 2));
  EXPECT_EQ(*cfg.seed, 9u);
}

TEST(Config, RoundTrip) {
  const auto cfg = default_config();
  const auto again = config_from_json(config_to_json(cfg));
  EXPECT_EQ(config_to_json(again), config_to_json(cfg));
}

TEST(Config, Errors) {
  EXPECT_THROW(config_from_string("{"), InstanceError);
  EXPECT_THROW(config_from_string(R"({"n": 1})"), InstanceError);
  EXPECT_THROW(config_from_string(R"({"n": 0, "r": 1, "q_exponents": [], "lambda_exponents": [[]]})"), InstanceError);
  EXPECT_THROW(config_from_string(R"({"n": 1, "r": 1, "q_exponents": [["one"]], "lambda_exponents": [[[0]]]})"),
               InstanceError);
  EXPECT_THROW(config_from_string(R"({"n": 2, "r": 1, "q_exponents": [[1], [1]], "lambda_exponents": [[[0, 1], [1, 0]]]})"),
               InstanceError);
  EXPECT_THROW(config_from_string(R"({"n": 1, "r": 1, "q_exponents": [[0]], "lambda_exponents": [[[0]]]})"),
               InstanceError);
  EXPECT_THROW(config_from_string(R"({"n": 1, "r": 1, "q_exponents": [[1]], "lambda_exponents": [[[0]]],
    "concrete": {"q": "1", "eta": ["2"], "mu": ["1"]}})"), InstanceError);
}

TEST(Cli, KnownCommands) {
  const auto& names = cli::command_names();
  EXPECT_EQ(names.size(), 12u);
  const auto out = run_command_safely("frobnicate", default_config(), {});
  EXPECT_EQ(out.status, cli::usage_error);
}

TEST(Cli, Scl) {
  const auto out = run_command_safely("scl", default_config(), {"x1", "y1"});
  EXPECT_EQ(out.status, cli::ok);
  EXPECT_TRUE(contains(out.text, "μ1*(1 + y1*x1); CONSISTENT")) << out.text;
  EXPECT_EQ(out.record["command"], "scl");
  EXPECT_EQ(out.record["status"], 0);
  EXPECT_TRUE(out.record.contains("instance"));
  EXPECT_TRUE(out.record["checks"].is_array());
}

TEST(Cli, NormalFormAndCommutator) {
  const auto cfg = default_config();
  auto out = run_command_safely("nf", cfg, {"x1*y1 - eta^[1,0]*y1*x1 - eta^[1,0] + 1"});
  EXPECT_EQ(out.status, cli::ok);
  EXPECT_EQ(out.record["result"]["normal_form"], "0");
  out = run_command_safely("comm", cfg, {"x2", "y2"});
  EXPECT_EQ(out.status, cli::ok);
  out = run_command_safely("limit", cfg, {"eta^[1,0]*y1"});
  EXPECT_EQ(out.record["result"]["limit"], "y1");
}

TEST(Cli, Admissible) {
  auto out = run_command_safely("admissible", default_config(), {"1"});
  EXPECT_EQ(out.status, cli::ok);
  EXPECT_TRUE(contains(out.text, "{z1}"));
  out = run_command_safely("admissible", default_config(), {"0"});
  EXPECT_EQ(out.status, cli::usage_error);
}

TEST(Cli, StratumAndCenter) {
  auto out = run_command_safely("stratum", default_config(), {"z1,z2,y2"});
  EXPECT_EQ(out.status, cli::ok) << out.text;
  out = run_command_safely("center", default_config(), {"z1"});
  EXPECT_EQ(out.status, cli::ok) << out.text;
  out = run_command_safely("stratum", default_config(), {"z2,y2"});
  EXPECT_EQ(out.status, cli::usage_error);
}

TEST(Cli, QuantumPlaneExample) {
  const auto out = run_command_safely("example", plane_config(), {"quantum-plane"});
  EXPECT_EQ(out.status, cli::ok);
  EXPECT_TRUE(contains(out.text, "relation: xy=tyx"));
  EXPECT_TRUE(contains(out.text, "limit bracket: {x,y}=xy"));
}

TEST(Cli, ErrorsBecomeExitCodes) {
  const auto cfg = default_config();
  auto out = run_command_safely("nf", cfg, {"y1 + y4"});
  EXPECT_EQ(out.status, cli::usage_error);
  EXPECT_EQ(out.record["error"]["type"], "parse");
  EXPECT_EQ(out.record["error"]["column"], 6);
  EXPECT_TRUE(contains(out.text, "unknown generator index 4 (valid 1..3)"));
  out = run_command_safely("nf", cfg, {});
  EXPECT_EQ(out.status, cli::usage_error);
}

TEST(Cli, ValidateAndVerify) {
  EXPECT_EQ(run_command_safely("validate", default_config(), {}).status, cli::ok);
  cli::CommandOptions opt;
  opt.suite = "9";
  const auto out = run_command_safely("verify", default_config(), {}, opt);
  EXPECT_EQ(out.status, cli::ok) << out.text;
  EXPECT_EQ(out.record["result"]["suites"].size(), 1u);
  opt.suite = "99";
  EXPECT_EQ(run_command_safely("verify", default_config(), {}, opt).status, cli::usage_error);
}

TEST(Cli, Maltsiniotis) {
  const auto out = run_command_safely("maltsiniotis", default_config(), {"z1"});
  EXPECT_EQ(out.status, cli::ok);
  EXPECT_EQ(out.record["result"]["image"], to_string(make_formal_algebra(default_config().params).z(1)));
}
