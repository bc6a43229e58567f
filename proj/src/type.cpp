// SPDX-License-Identifier: Apache-2.0
#include "imnet/type.hpp"

#include "imnet/error.hpp"
#include "imnet/format.hpp"

namespace imnet {

Type Type::of(Kind kind) {
  if (kind == Kind::Tuple || kind == Kind::Set) {
    throw Error(ErrorKind::InvalidValue, "composite type needs components");
  }
  return Type(kind);
}

Type Type::tuple(std::vector<Type> components) {
  if (components.size() < 2) throw Error(ErrorKind::InvalidValue, "tuple type needs arity >= 2");
  Type t(Kind::Tuple);
  t.components_ = std::move(components);
  return t;
}

Type Type::set(Type element) {
  Type t(Kind::Set);
  t.components_.push_back(std::move(element));
  return t;
}

std::string to_string(const Type& type) {
  switch (type.kind()) {
    case Type::Kind::Any: return "any";
    case Type::Kind::Nat: return "nat";
    case Type::Kind::Bool: return "bool";
    case Type::Kind::SwitchId: return "switchid";
    case Type::Kind::Port: return "port";
    case Type::Kind::IpAddr: return "ip";
    case Type::Kind::Packet: return "packet";
    case Type::Kind::Pattern: return "pattern";
    case Type::Kind::Action: return "action";
    case Type::Kind::RuleList: return "rulelist";
    case Type::Kind::Set: return "set<" + to_string(type.components()[0]) + ">";
    case Type::Kind::Tuple: {
      std::string out = "(";
      for (std::size_t i = 0; i < type.components().size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(type.components()[i]);
      }
      return out + ")";
    }
  }
  return "?";
}

std::optional<Type> unify(const Type& a, const Type& b) {
  if (a.kind() == Type::Kind::Any) return b;
  if (b.kind() == Type::Kind::Any) return a;
  if (a.kind() != b.kind() || a.components().size() != b.components().size()) return std::nullopt;
  if (a.components().empty()) return a;
  std::vector<Type> merged;
  merged.reserve(a.components().size());
  for (std::size_t i = 0; i < a.components().size(); ++i) {
    auto c = unify(a.components()[i], b.components()[i]);
    if (!c) return std::nullopt;
    merged.push_back(std::move(*c));
  }
  return a.kind() == Type::Kind::Set ? Type::set(std::move(merged[0])) : Type::tuple(std::move(merged));
}

namespace {

Type type_of(const Value& v, bool wildcard_is_any);

Type set_type(const ValueSet& set, bool wildcard_is_any) {
  Type element = Type::any();
  for (std::size_t i = 0; i < set.items.size(); ++i) {
    auto next = unify(element, type_of(set.items[i], wildcard_is_any));
    if (!next) {
      throw Error(ErrorKind::Heterogeneous, "set element " + std::to_string(i) + " (" +
                                                to_string(set.items[i]) + ") does not share the set's type");
    }
    element = std::move(*next);
  }
  return Type::set(std::move(element));
}

Type type_of(const Value& v, bool wildcard_is_any) {
  using K = Type::Kind;
  return std::visit(
      [&](const auto& x) -> Type {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nat>) return Type::of(K::Nat);
        else if constexpr (std::is_same_v<T, bool>) return Type::of(K::Bool);
        else if constexpr (std::is_same_v<T, SwitchId>) return Type::of(K::SwitchId);
        else if constexpr (std::is_same_v<T, Port>) return Type::of(K::Port);
        else if constexpr (std::is_same_v<T, IpAddr>) return Type::of(K::IpAddr);
        else if constexpr (std::is_same_v<T, Packet>) return Type::of(K::Packet);
        else if constexpr (std::is_same_v<T, Pattern>) return Type::of(K::Pattern);
        else if constexpr (std::is_same_v<T, Action> || std::is_same_v<T, ActionCtor>) return Type::of(K::Action);
        else if constexpr (std::is_same_v<T, RuleList>) return Type::of(K::RuleList);
        else if constexpr (std::is_same_v<T, ValueSet>) return set_type(x, wildcard_is_any);
        else if constexpr (std::is_same_v<T, Wildcard>) {
          if (wildcard_is_any) return Type::any();
          throw Error(ErrorKind::UntypeableValue, "wildcard has no type");
        } else {
          static_assert(std::is_same_v<T, Tuple>);
          std::vector<Type> parts;
          parts.reserve(x.items.size());
          for (const Value& item : x.items) parts.push_back(type_of(item, wildcard_is_any));
          return Type::tuple(std::move(parts));
        }
      },
      v.storage());
}

}  // namespace

Type value_type(const Value& v) { return type_of(v, false); }

Type event_typecheck(const Event& ev) {
  Type shared = Type::any();
  for (std::size_t i = 0; i < ev.values.size(); ++i) {
    auto next = unify(shared, type_of(ev.values[i], true));
    if (!next) {
      throw Error(ErrorKind::Heterogeneous, "event element " + std::to_string(i) + " has type " +
                                                to_string(type_of(ev.values[i], true)) + ", expected " +
                                                to_string(shared));
    }
    shared = std::move(*next);
  }
  return shared;
}

}  // namespace imnet
