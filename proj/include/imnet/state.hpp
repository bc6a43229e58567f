// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "imnet/value.hpp"

namespace imnet {

struct RuleBinding {
  SwitchId sw;
  RuleList rules;

  bool operator==(const RuleBinding&) const = default;
};

/// Staged (switch, rule list) bindings awaiting Register. Bindings keep
/// insertion order so installation is deterministic.
struct InitialRuleAssignment {
  std::vector<RuleBinding> bindings;

  bool contains(const RuleBinding& b) const;
  /// Set union: appends every binding of `other` not already present.
  void unite(const InitialRuleAssignment& other);

  bool empty() const { return bindings.empty(); }
  bool operator==(const InitialRuleAssignment&) const = default;
};

using SwitchState = std::map<SwitchId, RuleList>;

/// What a program variable can hold.
using Binding = std::variant<Event, RuleList, InitialRuleAssignment>;

using VariableState = std::map<std::string, Binding, std::less<>>;

/// Throws UnboundVariable.
const Binding& lookup(const VariableState& gamma, std::string_view name);
/// Throws UnboundVariable or TypeMismatch when the binding is not an event.
const Event& lookup_event(const VariableState& gamma, std::string_view name);

/// The semantic state triple (sigma, gamma, ir).
struct MachineState {
  SwitchState sigma;
  VariableState gamma;
  InitialRuleAssignment ir;

  bool operator==(const MachineState&) const = default;
};

}  // namespace imnet
