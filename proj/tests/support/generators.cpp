// SPDX-License-Identifier: Apache-2.0
#include "generators.hpp"

#include <algorithm>
#include <set>

namespace imnet::testing {

using namespace ast;

IpAddr gen_ip(Gen& g) { return IpAddr{static_cast<std::uint32_t>((10u << 24) | g.uniform(1, 6))}; }

PacketHeaders gen_headers(Gen& g, std::uint64_t max_port) {
  PacketHeaders h;
  h.srcip = gen_ip(g);
  h.dstip = gen_ip(g);
  h.srcport = g.pick(std::vector<std::uint64_t>{22, 80, 443, 8080});
  h.dstport = g.pick(std::vector<std::uint64_t>{22, 80, 443, 8080});
  h.inport = g.uniform(1, max_port);
  h.ethsrc = g.uniform(0, 3);
  h.ethdst = g.uniform(0, 3);
  return h;
}

Packet gen_packet(Gen& g) {
  Packet pk;
  pk.headers = gen_headers(g);
  pk.uid = g.uniform(0, 5);
  if (g.coin(0.2)) pk.payload = {static_cast<std::uint8_t>(g.uniform(0, 255)), 0xab};
  return pk;
}

Pattern gen_pattern(Gen& g, std::uint64_t max_port) {
  const PacketHeaders h = gen_headers(g, max_port);
  Pattern p;
  for (HeaderField f : kHeaderFields) {
    if (g.coin(0.25)) p.constrain(f, h.get(f));
  }
  return p;
}

Action gen_action(Gen& g) {
  switch (g.uniform(0, 3)) {
    case 0: return SendController{};
    case 1: return SendAll{};
    case 2: return SendOut{Port{static_cast<std::uint32_t>(g.uniform(1, 4))}};
    default: {
      const HeaderField f = kHeaderFields[g.index(kHeaderFields.size())];
      if (field_holds_ip(f)) return Change{f, gen_ip(g)};
      return Change{f, HeaderValue{g.uniform(0, 4)}};
    }
  }
}

RuleList gen_rule_list(Gen& g, std::size_t max_rules) {
  RuleList rl;
  const std::size_t n = g.uniform(0, max_rules);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Action> acts;
    const std::size_t k = g.uniform(1, 2);
    for (std::size_t j = 0; j < k; ++j) acts.push_back(gen_action(g));
    rl.rules.emplace_back(gen_pattern(g), std::move(acts));
  }
  return rl;
}

SwitchId gen_switch(Gen& g) { return SwitchId{"s" + std::to_string(g.uniform(0, 3))}; }

Type gen_type(Gen& g, int depth) {
  using K = Type::Kind;
  static const std::vector<K> scalars = {K::Nat,    K::Bool,    K::SwitchId, K::Port,    K::IpAddr,
                                         K::Packet, K::Pattern, K::Action,   K::RuleList};
  const std::uint64_t roll = g.uniform(0, 9);
  if (depth > 0 && roll == 0) {
    std::vector<Type> parts;
    const std::size_t n = g.uniform(2, 3);
    for (std::size_t i = 0; i < n; ++i) parts.push_back(gen_type(g, depth - 1));
    return Type::tuple(std::move(parts));
  }
  if (depth > 0 && roll == 1) return Type::set(gen_type(g, 0));
  return Type::of(g.pick(scalars));
}

Value gen_value_of(Gen& g, const Type& t) {
  using K = Type::Kind;
  switch (t.kind()) {
    case K::Any: return gen_value(g, 1);
    case K::Nat: return Value::nat(g.uniform(0, 100));
    case K::Bool: return Value(g.coin());
    case K::SwitchId: return Value(gen_switch(g));
    case K::Port: return Value(Port{static_cast<std::uint32_t>(g.uniform(0, 8))});
    case K::IpAddr: return Value(gen_ip(g));
    case K::Packet: return Value(gen_packet(g));
    case K::Pattern: return Value(gen_pattern(g));
    case K::Action: return Value(gen_action(g));
    case K::RuleList: return Value(gen_rule_list(g, 2));
    case K::Tuple: {
      std::vector<Value> items;
      for (const Type& c : t.components()) items.push_back(gen_value_of(g, c));
      return Value::tuple(std::move(items));
    }
    case K::Set: {
      ValueSet s;
      const std::size_t n = g.uniform(0, 3);
      for (std::size_t i = 0; i < n; ++i) s.insert(gen_value_of(g, t.components()[0]));
      return Value(std::move(s));
    }
  }
  return Value::nat(0);
}

Value gen_value(Gen& g, int depth) { return gen_value_of(g, gen_type(g, depth)); }

Event gen_event(Gen& g, const Type& t, std::size_t max_len) {
  Event ev;
  const std::size_t n = g.uniform(0, max_len);
  for (std::size_t i = 0; i < n; ++i) ev.values.push_back(gen_value_of(g, t));
  return ev;
}

Event gen_nat_event(Gen& g, std::size_t len, std::uint64_t max) {
  Event ev;
  for (std::size_t i = 0; i < len; ++i) ev.values.push_back(Value::nat(g.uniform(0, max)));
  return ev;
}

Expr gen_nat_expr(Gen& g, int depth) {
  const std::uint64_t roll = depth <= 0 ? g.uniform(0, 1) : g.uniform(0, 4);
  switch (roll) {
    case 0: return var("t");
    case 1: return constant(Value::nat(g.uniform(0, 9)));
    case 2: return arith(ArithOp::Add, gen_nat_expr(g, depth - 1), gen_nat_expr(g, depth - 1));
    case 3: return proj(g.uniform(0, 1), tuple({gen_nat_expr(g, depth - 1), gen_nat_expr(g, depth - 1)}));
    default: {
      // t + k - k stays non-negative.
      Expr k = constant(Value::nat(g.uniform(0, 5)));
      return arith(ArithOp::Sub, arith(ArithOp::Add, gen_nat_expr(g, depth - 1), k), k);
    }
  }
}

Expr gen_nat_predicate(Gen& g) {
  static const std::vector<CmpOp> ops = {CmpOp::Eq, CmpOp::Ne, CmpOp::Lt, CmpOp::Le};
  if (g.coin(0.1)) return constant(Value(g.coin()));
  return cmp(g.pick(ops), gen_nat_expr(g, 2), gen_nat_expr(g, 2));
}

Expr substitute(const Expr& e, const std::string& name, const Expr& with) {
  return std::visit(
      [&](const auto& x) -> Expr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VarExpr>) {
          return x.name == name ? with : e;
        } else if constexpr (std::is_same_v<T, ConstExpr>) {
          return e;
        } else if constexpr (std::is_same_v<T, TupleExpr>) {
          std::vector<Expr> items;
          for (const Expr& i : x.items) items.push_back(substitute(i, name, with));
          return tuple(std::move(items));
        } else if constexpr (std::is_same_v<T, ProjExpr>) {
          return proj(x.index, substitute(*x.of, name, with));
        } else if constexpr (std::is_same_v<T, BuiltinExpr>) {
          std::vector<Expr> args;
          for (const Expr& a : x.args) args.push_back(substitute(a, name, with));
          return call(x.fn, std::move(args));
        } else if constexpr (std::is_same_v<T, CmpExpr>) {
          return cmp(x.op, substitute(*x.lhs, name, with), substitute(*x.rhs, name, with));
        } else {
          return arith(x.op, substitute(*x.lhs, name, with), substitute(*x.rhs, name, with));
        }
      },
      e.node);
}

Expr gen_any_expr(Gen& g, const std::vector<std::string>& vars, int depth) {
  const std::uint64_t roll = depth <= 0 ? g.uniform(0, 1) : g.uniform(0, 7);
  auto sub = [&] { return gen_any_expr(g, vars, depth - 1); };
  switch (roll) {
    case 0: return var(g.pick(vars));
    case 1: {
      Value v = g.coin(0.2) ? Value(Wildcard{}) : gen_value(g, 1);
      return constant(std::move(v));
    }
    case 2: {
      std::vector<Expr> items;
      const std::size_t n = g.uniform(2, 3);
      for (std::size_t i = 0; i < n; ++i) items.push_back(sub());
      return tuple(std::move(items));
    }
    case 3: return proj(g.uniform(0, 3), sub());
    case 4: {
      static const std::vector<Builtin> unary = {Builtin::Port,    Builtin::SrcIp,   Builtin::DstIp,
                                                 Builtin::SrcPort, Builtin::DstPort, Builtin::InPort};
      if (g.coin(0.3)) return call(Builtin::Switch, {sub(), var(g.pick(vars))});
      return call(g.pick(unary), {sub()});
    }
    case 5: {
      static const std::vector<CmpOp> ops = {CmpOp::Eq, CmpOp::Ne, CmpOp::Lt, CmpOp::Le};
      return cmp(g.pick(ops), sub(), sub());
    }
    default:
      return arith(g.coin() ? ArithOp::Add : ArithOp::Sub, sub(), sub());
  }
}

std::string gen_var(Gen& g) {
  static const std::vector<std::string> names = {"x", "y", "z", "a", "b", "rules", "evt", "v1", "w_2"};
  return g.pick(names);
}

namespace {

Lambda gen_lambda(Gen& g) {
  const std::string param = g.coin(0.8) ? "t" : "u";
  return Lambda{param, gen_any_expr(g, {param, gen_var(g)}, 3)};
}

ValueSet gen_seed(Gen& g) {
  ValueSet s;
  const std::size_t n = g.uniform(0, 2);
  const Type t = gen_type(g, 0);
  for (std::size_t i = 0; i < n; ++i) s.insert(gen_value_of(g, t));
  return s;
}

}  // namespace

EventTransformer gen_any_transformer(Gen& g) {
  switch (g.uniform(0, 9)) {
    case 0: return Lift{gen_var(g), gen_lambda(g)};
    case 1: return ApplyLft{gen_var(g), gen_lambda(g)};
    case 2: return ApplyRit{gen_var(g), gen_lambda(g)};
    case 3: return Merge{gen_var(g), gen_var(g)};
    case 4: return MixFst{gen_seed(g), gen_var(g), gen_var(g)};
    case 5: return MixSnd{gen_seed(g), gen_var(g), gen_var(g)};
    case 6: return Filter{gen_var(g), gen_lambda(g)};
    case 7: return Once{gen_var(g), g.uniform(0, 1000)};
    case 8: return MakForwRule{gen_var(g)};
    default: return MakeRule{gen_var(g)};
  }
}

Stmt gen_any_stmt(Gen& g, int depth) {
  const std::uint64_t roll = depth <= 0 ? g.uniform(0, 3) : g.uniform(0, 5);
  switch (roll) {
    case 0: return Stmt{Assign{gen_var(g), gen_any_transformer(g)}};
    case 1: return Stmt{AddRules{gen_var(g)}};
    case 2: return Stmt{Register{}};
    case 3: return Stmt{Send{gen_var(g)}};
    default: return seq(gen_any_stmt(g, depth - 1), gen_any_stmt(g, depth - 1));
  }
}

Program gen_any_program(Gen& g) {
  static const std::vector<QueryName> queries = {QueryName::SwitchIds, QueryName::SourceIps,
                                                 QueryName::ArrivedPackets};
  Program p{{}, gen_any_stmt(g)};
  std::set<std::string> used;
  const std::size_t n = g.uniform(0, 3);
  for (std::size_t i = 0; i < n; ++i) {
    std::string v = gen_var(g);
    if (used.insert(v).second) p.defs.push_back(Def{v, g.pick(queries)});
  }
  return p;
}

Topology gen_topology(Gen& g, std::size_t max_switches, std::uint32_t max_ports) {
  Topology topo;
  const std::size_t n = g.uniform(1, max_switches);
  std::vector<Endpoint> free;
  for (std::size_t i = 0; i < n; ++i) {
    const SwitchId id{"s" + std::to_string(i)};
    std::set<Port> ports;
    const std::uint32_t k = static_cast<std::uint32_t>(g.uniform(1, max_ports));
    for (std::uint32_t p = 1; p <= k; ++p) {
      ports.insert(Port{p});
      free.push_back(Endpoint{id, Port{p}});
    }
    topo.add_switch(id, ports);
  }
  std::shuffle(free.begin(), free.end(), g.rng());
  std::uint32_t host = 1;
  while (!free.empty()) {
    const Endpoint a = free.back();
    free.pop_back();
    const std::uint64_t roll = g.uniform(0, 9);
    if (roll < 6 && !free.empty()) {
      // Link to another free endpoint; self-loops on one switch are allowed.
      const std::size_t j = g.index(free.size());
      const Endpoint b = free[j];
      free.erase(free.begin() + static_cast<std::ptrdiff_t>(j));
      topo.add_link(a, b);
    } else if (roll < 8) {
      topo.add_host(IpAddr{(10u << 24) | host++}, a);
    }
  }
  return topo;
}

}  // namespace imnet::testing
