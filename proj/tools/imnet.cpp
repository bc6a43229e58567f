// SPDX-License-Identifier: Apache-2.0
// imnet: check, run and compare ImNet programs and traces.
#include <iostream>

#include <CLI11.hpp>

#include "imnet/cli.hpp"
#include "imnet/error.hpp"
#include "imnet/io.hpp"

int main(int argc, char** argv) {
  using namespace imnet;
  CLI::App app{"ImNet interpreter and switch fabric simulator"};
  app.require_subcommand(1);

  std::string check_path;
  auto* check = app.add_subcommand("check", "parse a program and report diagnostics");
  check->add_option("program", check_path, "program file")->required();

  cli::RunConfig run_cfg;
  std::string default_action;
  auto* run = app.add_subcommand("run", "execute a program and write its trace");
  run->add_option("--topology", run_cfg.topology, "topology JSON")->required();
  run->add_option("--program", run_cfg.program, "program file")->required();
  run->add_option("--inject", run_cfg.injections, "packet injection JSON");
  run->add_option("--bindings", run_cfg.bindings, "initial variable bindings JSON");
  run->add_option("--trace", run_cfg.trace, "trace output (JSON Lines); stdout if omitted");
  run->add_option("--default-action", default_action, "table-miss behaviour")
      ->check(CLI::IsMember({"controller", "drop"}));
  run->add_flag("--global-broadcast", run_cfg.global_broadcast, "sendall reaches every other switch");
  run->add_option("--hop-budget", run_cfg.hop_budget, "forwarding hops allowed per packet")
      ->check(CLI::PositiveNumber);
  run->add_flag("--drain", run_cfg.drain, "process packets injected after the program");

  std::string actual, golden;
  auto* diff = app.add_subcommand("diff-trace", "compare two traces record by record");
  diff->add_option("actual", actual, "trace to check")->required();
  diff->add_option("golden", golden, "reference trace")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kConfigError;
  }

  if (*check) return cli::cmd_check(check_path, std::cout, std::cerr);
  if (*run) {
    if (!default_action.empty()) run_cfg.default_action = parse_miss_behavior(default_action);
    return cli::cmd_run(run_cfg, std::cout, std::cerr);
  }
  return cli::cmd_diff_trace(actual, golden, std::cout, std::cerr);
}
