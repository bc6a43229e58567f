// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imnet/fabric.hpp"
#include "imnet/state.hpp"
#include "imnet/topology.hpp"

// JSON input files. The schemas are described in docs/formats.md. Every
// loader throws Error(Config) on unreadable files and malformed content.

namespace imnet {

struct TopologyFile {
  Topology topology;
  std::optional<MissBehavior> default_action;
};

enum class InjectPhase { Before, After };

struct Injection {
  SwitchId at;
  InjectPhase phase = InjectPhase::Before;
  Packet packet;
};

TopologyFile parse_topology(const std::string& json_text);
std::vector<Injection> parse_injections(const std::string& json_text);
/// {"var": "<binding literal>"}; literal errors keep their ParseError.
VariableState parse_bindings(const std::string& json_text);

std::string read_file(const std::string& path);
TopologyFile load_topology(const std::string& path);
std::vector<Injection> load_injections(const std::string& path);
VariableState load_bindings(const std::string& path);

MissBehavior parse_miss_behavior(const std::string& name);

}  // namespace imnet
