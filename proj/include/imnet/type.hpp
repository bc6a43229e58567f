// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "imnet/value.hpp"

namespace imnet {

/// Structural type of a value. `Any` is the type of the empty event (and of
/// wildcards inside events); it unifies with every type.
class Type {
 public:
  enum class Kind { Any, Nat, Bool, SwitchId, Port, IpAddr, Packet, Pattern, Action, RuleList, Tuple, Set };

  static Type any() { return Type(Kind::Any); }
  static Type of(Kind kind);
  static Type tuple(std::vector<Type> components);  // arity >= 2
  static Type set(Type element);

  Kind kind() const { return kind_; }
  const std::vector<Type>& components() const { return components_; }

  bool operator==(const Type&) const = default;

 private:
  explicit Type(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<Type> components_;
};

std::string to_string(const Type& type);

/// Throws UntypeableValue for Wildcard (anywhere inside v).
Type value_type(const Value& v);

/// Most specific type compatible with both, or nullopt.
std::optional<Type> unify(const Type& a, const Type& b);

/// Shared type of all values in ev; Any for the empty event. Wildcards
/// inside tuples type as Any so rule-construction triples still check.
/// Throws Heterogeneous naming the first offending index.
Type event_typecheck(const Event& ev);

}  // namespace imnet
