// SPDX-License-Identifier: Apache-2.0
#include "imnet/state.hpp"

#include <algorithm>

#include "imnet/error.hpp"

namespace imnet {

bool InitialRuleAssignment::contains(const RuleBinding& b) const {
  return std::find(bindings.begin(), bindings.end(), b) != bindings.end();
}

void InitialRuleAssignment::unite(const InitialRuleAssignment& other) {
  for (const RuleBinding& b : other.bindings) {
    if (!contains(b)) bindings.push_back(b);
  }
}

const Binding& lookup(const VariableState& gamma, std::string_view name) {
  auto it = gamma.find(name);
  if (it == gamma.end()) throw Error(ErrorKind::UnboundVariable, "unbound variable '" + std::string(name) + "'");
  return it->second;
}

const Event& lookup_event(const VariableState& gamma, std::string_view name) {
  const Binding& b = lookup(gamma, name);
  if (const auto* ev = std::get_if<Event>(&b)) return *ev;
  throw Error(ErrorKind::TypeMismatch, "variable '" + std::string(name) + "' does not hold an event");
}

}  // namespace imnet
