// qweyl: command-line front end.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qweyl/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in multi-parameter quantized Weyl algebras and their semiclassical limits"};
  std::string command;
  std::vector<std::string> args;
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> suite;
  bool json = false;

  std::string commands;
  for (const auto& c : qweyl::cli::command_names()) commands += (commands.empty() ? "" : ", ") + c;
  app.add_option("command", command, "one of: " + commands)->required();
  app.add_option("args", args, "command arguments (expressions, N, TSPEC)");
  app.add_option("--config", config_path, "instance configuration (JSON)");
  app.add_flag("--json", json, "print a machine-readable record");
  app.add_option("--seed", seed, "seed for randomized suites");
  app.add_option("--suite", suite, "run a single verification suite (name or number)");
  app.footer(
      "Expressions: y1, x2, z3, eta^[1,-1], mu1, rationals p/q, + - * ^ and parentheses.\n"
      "Use -- before an expression that starts with '-'.\n"
      "Exit status: 0 success, 1 verification failure, 2 usage or configuration error.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : qweyl::cli::usage_error;
  }

  qweyl::InstanceConfig cfg;
  try {
    cfg = config_path ? qweyl::load_config(*config_path) : qweyl::default_config();
  } catch (const qweyl::InstanceError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return qweyl::cli::usage_error;
  }

  const auto out = qweyl::cli::run_command_safely(command, cfg, args, {seed, suite});
  if (json)
    std::cout << out.record.dump(2) << "\n";
  else
    (out.status == qweyl::cli::usage_error ? std::cerr : std::cout) << out.text;
  return out.status;
}
