// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "imnet/state.hpp"
#include "imnet/value.hpp"

// Canonical text form. Every value prints in the literal syntax accepted by
// parse_value / parse_binding, so printing and re-parsing is lossless:
//
//   Nat 80            80
//   Port 3            port(3)
//   IpAddr            10.0.0.1
//   SwitchId          id1
//   Packet            pk1{srcip=10.0.0.1, dstip=..., ethdst=2}
//   Pattern           srcport(80) & inport(1)    (match-all: *)
//   Action            sendall | sendcontroller | sendout(2) | change(dstport, 8080)
//   ActionCtor        sendout | change(dstport)
//   RuleList          [(srcport(80), [sendall]), (*, [sendcontroller])]
//   Tuple             (id1, port(2), pk1{...})
//   ValueSet          {1, 2}
//   Wildcard          _
//   Event             <v1, v2, ...>
//   Assignment (ir)   {(id1, [...]), (id2, [...])}
//   SwitchState       {id1 -> [...], id2 -> [...]}
//   VariableState     {x -> <...>, y -> [...]}
//   MachineState      (sigma, gamma, ir)

namespace imnet {

std::string to_string(const HeaderValue& v);
std::string to_string(const Packet& p);
std::string to_string(const Pattern& p);
std::string to_string(const Action& a);
std::string to_string(const ActionCtor& c);
std::string to_string(const Rule& r);
std::string to_string(const RuleList& rl);
std::string to_string(const Value& v);
std::string to_string(const Event& ev);
std::string to_string(const RuleBinding& b);
std::string to_string(const InitialRuleAssignment& ir);
std::string to_string(const Binding& b);
std::string to_string(const SwitchState& sigma);
std::string to_string(const VariableState& gamma);
std::string to_string(const MachineState& s);

}  // namespace imnet
