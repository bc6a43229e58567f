// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>

#include "imnet/value.hpp"

namespace imnet {

bool pattern_matches(const Pattern& pattern, const Packet& packet);

/// Index of the first rule whose pattern matches, or nullopt on a miss.
std::optional<std::size_t> rule_lookup(const RuleList& rules, const Packet& packet);

}  // namespace imnet
