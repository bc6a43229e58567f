// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "imnet/fabric.hpp"

namespace imnet::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kProgramError = 1;
inline constexpr int kConfigError = 2;

struct RunConfig {
  std::string topology;
  std::string program;
  std::optional<std::string> injections;
  std::optional<std::string> bindings;
  std::optional<std::string> trace;  // stdout when absent
  std::optional<MissBehavior> default_action;  // overrides the topology file
  bool global_broadcast = false;
  std::size_t hop_budget = 64;
  bool drain = false;  // process packets injected after the program
};

int cmd_check(const std::string& program_path, std::ostream& out, std::ostream& err);
int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_diff_trace(const std::string& actual_path, const std::string& golden_path, std::ostream& out,
                   std::ostream& err);

}  // namespace imnet::cli
