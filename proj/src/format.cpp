// SPDX-License-Identifier: Apache-2.0
#include "imnet/format.hpp"

#include <sstream>

namespace imnet {

namespace {

template <class Range, class Fn>
std::string join(const Range& items, std::string_view sep, Fn&& fn) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += sep;
    first = false;
    out += fn(item);
  }
  return out;
}

constexpr char kHex[] = "0123456789abcdef";

}  // namespace

std::string to_string(const HeaderValue& v) {
  if (const auto* ip = std::get_if<IpAddr>(&v)) return ip->to_string();
  return std::to_string(std::get<std::uint64_t>(v));
}

std::string to_string(const Packet& p) {
  std::string out = "pk" + std::to_string(p.uid) + "{";
  out += join(kHeaderFields, ", ", [&](HeaderField f) {
    return std::string(field_name(f)) + "=" + to_string(p.headers.get(f));
  });
  if (!p.payload.empty()) {
    out += ", payload=\"";
    for (std::uint8_t b : p.payload) {
      out += kHex[b >> 4];
      out += kHex[b & 0xf];
    }
    out += "\"";
  }
  return out + "}";
}

std::string to_string(const Pattern& p) {
  if (p.match_all()) return "*";
  return join(p.constraints(), " & ", [](const auto& c) {
    return std::string(field_name(c.first)) + "(" + to_string(c.second) + ")";
  });
}

std::string to_string(const Action& a) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SendController>) return "sendcontroller";
        else if constexpr (std::is_same_v<T, SendAll>) return "sendall";
        else if constexpr (std::is_same_v<T, SendOut>) return "sendout(" + std::to_string(x.port.number) + ")";
        else return "change(" + std::string(field_name(x.field)) + ", " + to_string(x.value) + ")";
      },
      a);
}

std::string to_string(const ActionCtor& c) {
  if (c.kind == ActionCtor::Kind::SendOut) return "sendout";
  return "change(" + std::string(field_name(*c.field)) + ")";
}

std::string to_string(const Rule& r) {
  return "(" + to_string(r.pattern()) + ", [" +
         join(r.actions(), ", ", [](const Action& a) { return to_string(a); }) + "])";
}

std::string to_string(const RuleList& rl) {
  return "[" + join(rl.rules, ", ", [](const Rule& r) { return to_string(r); }) + "]";
}

std::string to_string(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nat>) return std::to_string(x.value);
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else if constexpr (std::is_same_v<T, SwitchId>) return x.name;
        else if constexpr (std::is_same_v<T, Port>) return "port(" + std::to_string(x.number) + ")";
        else if constexpr (std::is_same_v<T, IpAddr>) return x.to_string();
        else if constexpr (std::is_same_v<T, Wildcard>) return "_";
        else if constexpr (std::is_same_v<T, Tuple>)
          return "(" + join(x.items, ", ", [](const Value& i) { return to_string(i); }) + ")";
        else if constexpr (std::is_same_v<T, ValueSet>)
          return "{" + join(x.items, ", ", [](const Value& i) { return to_string(i); }) + "}";
        else return to_string(x);
      },
      v.storage());
}

std::string to_string(const Event& ev) {
  return "<" + join(ev.values, ", ", [](const Value& v) { return to_string(v); }) + ">";
}

std::string to_string(const RuleBinding& b) { return "(" + b.sw.name + ", " + to_string(b.rules) + ")"; }

std::string to_string(const InitialRuleAssignment& ir) {
  return "{" + join(ir.bindings, ", ", [](const RuleBinding& b) { return to_string(b); }) + "}";
}

std::string to_string(const Binding& b) {
  return std::visit([](const auto& x) { return to_string(x); }, b);
}

std::string to_string(const SwitchState& sigma) {
  return "{" + join(sigma, ", ", [](const auto& e) { return e.first.name + " -> " + to_string(e.second); }) + "}";
}

std::string to_string(const VariableState& gamma) {
  return "{" + join(gamma, ", ", [](const auto& e) { return e.first + " -> " + to_string(e.second); }) + "}";
}

std::string to_string(const MachineState& s) {
  return "(" + to_string(s.sigma) + ", " + to_string(s.gamma) + ", " + to_string(s.ir) + ")";
}

}  // namespace imnet
