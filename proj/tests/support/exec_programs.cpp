// SPDX-License-Identifier: Apache-2.0
#include "exec_programs.hpp"

namespace imnet::testing {

using namespace ast;

namespace {

const std::vector<SwitchId> kSwitches = {SwitchId{"s0"}, SwitchId{"s1"}, SwitchId{"s2"}};

SwitchId any_switch(Gen& g) { return g.pick(kSwitches); }
Port any_port(Gen& g) { return Port{static_cast<std::uint32_t>(g.uniform(1, 2))}; }

// Events are homogeneous, so the third component's kind is fixed per event:
// 0 wildcard, 1 port, 2 nat.
Value mk_triple(Gen& g, int kind) {
  switch (kind) {
    case 0: return Value::tuple({gen_pattern(g), g.coin() ? Action(SendAll{}) : Action(SendController{}), Wildcard{}});
    case 1: return Value::tuple({gen_pattern(g), ActionCtor{ActionCtor::Kind::SendOut, std::nullopt}, any_port(g)});
    default:
      return Value::tuple(
          {gen_pattern(g), ActionCtor{ActionCtor::Kind::Change, HeaderField::DstPort}, Value::nat(g.uniform(0, 9))});
  }
}

Action send_action(Gen& g) {
  switch (g.uniform(0, 3)) {
    case 0: return SendController{};
    case 1: return SendAll{};
    case 2: return SendOut{any_port(g)};
    default: return Change{HeaderField::SrcPort, HeaderValue{g.uniform(0, 9)}};
  }
}

std::string out_var(Gen& g) { return "o" + std::to_string(g.uniform(1, 4)); }

Lambda nat_fn(Gen& g) { return Lambda{"t", gen_nat_expr(g, 2)}; }

ValueSet nat_seed(Gen& g) {
  ValueSet s;
  const std::size_t n = g.uniform(0, 2);
  for (std::size_t i = 0; i < n; ++i) s.insert(Value::nat(g.uniform(0, 20)));
  return s;
}

}  // namespace

Topology exec_topology() {
  Topology t;
  for (const SwitchId& id : kSwitches) t.add_switch(id, {Port{1}, Port{2}});
  t.add_link({SwitchId{"s0"}, Port{2}}, {SwitchId{"s1"}, Port{2}});
  for (std::uint32_t i = 0; i < kSwitches.size(); ++i) {
    t.add_host(IpAddr{(10u << 24) | (i + 1)}, {kSwitches[i], Port{1}});
  }
  return t;
}

VariableState gen_exec_gamma(Gen& g) {
  const std::size_t n = g.uniform(0, 5);
  VariableState gamma;
  gamma.emplace("a", gen_nat_event(g, n));
  gamma.emplace("b", gen_nat_event(g, n));
  Event p, mk, fw, snd, sr;
  const int mk_kind = static_cast<int>(g.uniform(0, 2));
  for (std::size_t i = 0; i < n; ++i) {
    p.values.push_back(Value::tuple({Value::nat(g.uniform(0, 20)), Value::nat(g.uniform(0, 20))}));
    mk.values.push_back(mk_triple(g, mk_kind));
    fw.values.push_back(Value::tuple({any_switch(g), any_port(g), gen_packet(g)}));
  }
  const std::size_t k = g.uniform(0, 3);
  for (std::size_t i = 0; i < k; ++i) {
    Packet pk = gen_packet(g);
    pk.headers.inport = g.uniform(1, 2);
    snd.values.push_back(Value::tuple({any_switch(g), pk, send_action(g)}));
  }
  const RuleList rl = gen_rule_list(g, 3);
  for (const SwitchId& id : kSwitches) {
    if (g.coin()) sr.values.push_back(Value::tuple({id, rl}));
  }
  InitialRuleAssignment fr;
  const std::size_t m = g.uniform(0, 3);
  for (std::size_t i = 0; i < m; ++i) fr.bindings.push_back(RuleBinding{any_switch(g), gen_rule_list(g, 2)});
  gamma.emplace("p", std::move(p));
  gamma.emplace("one", Event{{Value::nat(g.uniform(0, 9))}});
  gamma.emplace("mk", std::move(mk));
  gamma.emplace("fw", std::move(fw));
  gamma.emplace("sw", Event{{kSwitches[0], kSwitches[1], kSwitches[2]}});
  gamma.emplace("snd", std::move(snd));
  gamma.emplace("rl", rl);
  gamma.emplace("sr", std::move(sr));
  gamma.emplace("fr", std::move(fr));
  return gamma;
}

MachineState gen_exec_state(Gen& g) {
  MachineState s;
  for (const SwitchId& id : kSwitches) {
    if (g.coin()) s.sigma.emplace(id, gen_rule_list(g, 3));
  }
  s.gamma = gen_exec_gamma(g);
  const std::size_t m = g.uniform(0, 2);
  for (std::size_t i = 0; i < m; ++i) s.ir.unite({{RuleBinding{any_switch(g), gen_rule_list(g, 2)}}});
  return s;
}

Stmt gen_exec_stmt(Gen& g) {
  auto assign = [&](std::string target, EventTransformer et) { return Stmt{Assign{std::move(target), std::move(et)}}; };
  switch (g.uniform(0, 15)) {
    case 0: return assign(out_var(g), Lift{"a", nat_fn(g)});
    case 1: return assign(out_var(g), Lift{"a", Lambda{"t", tuple({var("t"), gen_nat_expr(g, 2)})}});
    case 2: return assign(out_var(g), ApplyLft{"p", nat_fn(g)});
    case 3: return assign(out_var(g), ApplyRit{"p", nat_fn(g)});
    case 4: return assign(out_var(g), Merge{"a", "b"});
    case 5: return assign(out_var(g), Filter{"a", Lambda{"t", gen_nat_predicate(g)}});
    case 6: return assign(out_var(g), Once{"one", g.uniform(0, 5)});
    case 7: return assign(out_var(g), MixFst{nat_seed(g), "a", "b"});
    case 8: return assign(out_var(g), MixSnd{nat_seed(g), "a", "b"});
    case 9: return assign(out_var(g), MakeRule{"mk"});
    case 10: return assign("fr", MakForwRule{"fw"});
    case 11: return assign("sr", Lift{"sw", Lambda{"t", tuple({var("t"), var("rl")})}});
    case 12: return Stmt{AddRules{g.coin() ? "fr" : "sr"}};
    case 13: return Stmt{Register{}};
    case 14: return Stmt{Send{"snd"}};
    default: return assign(out_var(g), Lift{out_var(g), Lambda{"t", var("t")}});
  }
}

}  // namespace imnet::testing
