// SPDX-License-Identifier: Apache-2.0
#include "imnet/executor.hpp"

#include <utility>

#include "imnet/format.hpp"
#include "imnet/printer.hpp"
#include "imnet/transformers.hpp"

namespace imnet {

ExecError::ExecError(const Error& cause, std::string label, MachineState pre_state, std::vector<Snapshot> trace)
    : Error(cause.kind(), label + ": " + cause.what()),
      label_(std::move(label)),
      pre_state_(std::move(pre_state)),
      trace_(std::move(trace)) {}

MachineState exec_assign(const ast::Assign& a, const MachineState& s, const FabricView& env) {
  Binding u = eval_transformer(a.transformer, s.gamma, env);
  MachineState next = s;
  next.gamma.insert_or_assign(a.target, std::move(u));
  return next;
}

MachineState exec_add_rules(const ast::AddRules& a, const MachineState& s) {
  const Binding& b = lookup(s.gamma, a.source);
  InitialRuleAssignment incoming;
  if (const auto* ir = std::get_if<InitialRuleAssignment>(&b)) {
    incoming = *ir;
  } else if (const auto* ev = std::get_if<Event>(&b)) {
    for (std::size_t i = 0; i < ev->size(); ++i) {
      const Value& v = ev->values[i];
      const auto* t = v.get_if<Tuple>();
      const SwitchId* id = t && t->items.size() == 2 ? t->items[0].get_if<SwitchId>() : nullptr;
      const RuleList* rl = id ? t->items[1].get_if<RuleList>() : nullptr;
      if (!rl) {
        throw Error(ErrorKind::AddRulesType, a.source + "[" + std::to_string(i) +
                                                 "]: expected (switch, rule list), got " + to_string(v));
      }
      incoming.bindings.push_back(RuleBinding{*id, *rl});
    }
  } else {
    throw Error(ErrorKind::AddRulesType, "'" + a.source + "' holds a rule list, not switch bindings");
  }
  MachineState next = s;
  next.ir.unite(incoming);
  return next;
}

SwitchState install_rules(const SwitchState& sigma, const InitialRuleAssignment& ir, const Topology& topology) {
  for (const RuleBinding& b : ir.bindings) {
    if (!topology.has_switch(b.sw)) {
      throw Error(ErrorKind::UnknownSwitch, "Register: unknown switch '" + b.sw.name + "'");
    }
  }
  SwitchState next = sigma;
  for (const RuleBinding& b : ir.bindings) {
    auto& table = next[b.sw].rules;
    table.insert(table.end(), b.rules.rules.begin(), b.rules.rules.end());
  }
  return next;
}

MachineState exec_register(const MachineState& s, Fabric& fabric) {
  MachineState next = s;
  next.sigma = install_rules(s.sigma, s.ir, fabric.topology());
  next.ir = {};
  fabric.sync_tables(next.sigma);
  return next;
}

MachineState exec_send(const ast::Send& a, const MachineState& s, Fabric& fabric) {
  const Event& ev = lookup_event(s.gamma, a.source);
  Fabric work = fabric;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const Value& v = ev.values[i];
    const auto* t = v.get_if<Tuple>();
    const bool shaped = t && t->items.size() == 3 && t->items[0].is<SwitchId>() && t->items[1].is<Packet>() &&
                        t->items[2].is<Action>();
    if (!shaped) {
      throw Error(ErrorKind::Shape, a.source + "[" + std::to_string(i) + "]: expected (switch, packet, action), got " +
                                        to_string(v));
    }
    Packet pk = t->items[1].as<Packet>();
    try {
      work.apply_action(t->items[2].as<Action>(), pk, t->items[0].as<SwitchId>());
    } catch (const Error& e) {
      throw Error(e.kind(), a.source + "[" + std::to_string(i) + "]: " + e.what());
    }
  }
  fabric = std::move(work);
  return s;
}

namespace {

class Runner {
 public:
  Runner(Fabric& fabric, std::vector<Snapshot>* trace) : fabric_(fabric), trace_(trace) {}

  MachineState run(const ast::Stmt& stmt, const MachineState& s) {
    if (const auto* q = std::get_if<ast::Seq>(&stmt.node)) {
      MachineState mid = run(*q->first, s);
      return run(*q->second, mid);
    }
    const std::string label = print_stmt(stmt);
    MachineState next;
    try {
      next = std::visit(
          [&](const auto& node) -> MachineState {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ast::Assign>) return exec_assign(node, s, fabric_.view());
            else if constexpr (std::is_same_v<T, ast::AddRules>) return exec_add_rules(node, s);
            else if constexpr (std::is_same_v<T, ast::Register>) return exec_register(s, fabric_);
            else if constexpr (std::is_same_v<T, ast::Send>) return exec_send(node, s, fabric_);
            else return s;
          },
          stmt.node);
    } catch (const ExecError&) {
      throw;
    } catch (const Error& e) {
      if (!trace_) throw;
      throw ExecError(e, label, s, *trace_);
    }
    if (trace_) trace_->push_back(Snapshot{label, next});
    return next;
  }

 private:
  Fabric& fabric_;
  std::vector<Snapshot>* trace_;
};

}  // namespace

MachineState exec_seq(const ast::Seq& q, const MachineState& s, Fabric& fabric) {
  Runner r(fabric, nullptr);
  return r.run(*q.second, r.run(*q.first, s));
}

MachineState exec_stmt(const ast::Stmt& stmt, const MachineState& s, Fabric& fabric) {
  return Runner(fabric, nullptr).run(stmt, s);
}

VariableState exec_defs(const std::vector<ast::Def>& defs, const VariableState& gamma0, const FabricView& env) {
  VariableState gamma = gamma0;
  for (const ast::Def& d : defs) gamma.insert_or_assign(d.target, env.query(d.query));
  return gamma;
}

ExecOutcome run_program(const ast::Program& p, Fabric& fabric, const MachineState& initial) {
  ExecOutcome out;
  out.trace.push_back(Snapshot{"initial", initial});
  try {
    fabric.sync_tables(initial.sigma);
  } catch (const Error& e) {
    throw ExecError(e, "initial", initial, out.trace);
  }
  MachineState s = initial;
  for (const ast::Def& d : p.defs) {
    s.gamma = exec_defs({d}, s.gamma, fabric.view());
    out.trace.push_back(Snapshot{print_def(d), s});
  }
  Runner r(fabric, &out.trace);
  out.final_state = r.run(p.body, s);
  return out;
}

}  // namespace imnet
