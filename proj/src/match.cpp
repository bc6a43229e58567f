// SPDX-License-Identifier: Apache-2.0
#include "imnet/match.hpp"

#include <algorithm>

namespace imnet {

bool pattern_matches(const Pattern& pattern, const Packet& packet) {
  const auto& constraints = pattern.constraints();
  return std::all_of(constraints.begin(), constraints.end(),
                     [&](const auto& c) { return packet.headers.get(c.first) == c.second; });
}

std::optional<std::size_t> rule_lookup(const RuleList& rules, const Packet& packet) {
  for (std::size_t i = 0; i < rules.rules.size(); ++i) {
    if (pattern_matches(rules.rules[i].pattern(), packet)) return i;
  }
  return std::nullopt;
}

}  // namespace imnet
