// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "imnet/ast.hpp"
#include "imnet/error.hpp"
#include "imnet/fabric.hpp"
#include "imnet/state.hpp"

namespace imnet {

struct Snapshot {
  std::string label;  // "initial", a def, or an atomic statement without ';'
  MachineState state;

  bool operator==(const Snapshot&) const = default;
};

struct ExecOutcome {
  MachineState final_state;
  std::vector<Snapshot> trace;
};

/// A statement failure during run_program, carrying the failing statement,
/// the state it started from, and the snapshots taken before it.
class ExecError : public Error {
 public:
  ExecError(const Error& cause, std::string label, MachineState pre_state, std::vector<Snapshot> trace);

  const std::string& label() const noexcept { return label_; }
  const MachineState& pre_state() const noexcept { return pre_state_; }
  const std::vector<Snapshot>& trace() const noexcept { return trace_; }

 private:
  std::string label_;
  MachineState pre_state_;
  std::vector<Snapshot> trace_;
};

// Statement rules. Each one either returns the successor state or throws,
// leaving both the input state and the fabric untouched.

MachineState exec_assign(const ast::Assign& a, const MachineState& s, const FabricView& env);
MachineState exec_add_rules(const ast::AddRules& a, const MachineState& s);
MachineState exec_register(const MachineState& s, Fabric& fabric);
MachineState exec_send(const ast::Send& a, const MachineState& s, Fabric& fabric);
MachineState exec_seq(const ast::Seq& q, const MachineState& s, Fabric& fabric);
MachineState exec_stmt(const ast::Stmt& stmt, const MachineState& s, Fabric& fabric);

/// Appends ir's bindings to sigma's tables in order. Throws UnknownSwitch
/// (installing nothing) when a binding names a switch outside the topology.
SwitchState install_rules(const SwitchState& sigma, const InitialRuleAssignment& ir, const Topology& topology);

/// Binds every query result left to right. Throws UnknownQuery.
VariableState exec_defs(const std::vector<ast::Def>& defs, const VariableState& gamma0, const FabricView& env);

/// Synchronises the fabric to initial.sigma, runs the defs then the body.
/// Snapshots: the initial state, one per def, one per atomic statement.
/// Throws ExecError.
ExecOutcome run_program(const ast::Program& p, Fabric& fabric, const MachineState& initial);

}  // namespace imnet
