// SPDX-License-Identifier: Apache-2.0
#include "imnet/eval.hpp"

#include "imnet/error.hpp"
#include "imnet/format.hpp"

namespace imnet {

namespace {

using namespace ast;

class Evaluator {
 public:
  Evaluator(const std::string& param, const Value& arg, const VariableState& gamma, const FabricView& env)
      : param_(param), arg_(arg), gamma_(gamma), env_(env) {}

  Value eval(const Expr& e) const {
    return std::visit([&](const auto& node) { return eval_node(node); }, e.node);
  }

 private:
  Value eval_node(const VarExpr& v) const {
    if (v.name == param_) return arg_;
    const Binding& b = lookup(gamma_, v.name);
    if (const auto* rl = std::get_if<RuleList>(&b)) return Value(*rl);
    throw Error(ErrorKind::TypeMismatch, "variable '" + v.name + "' holds " +
                                             (std::holds_alternative<Event>(b) ? "an event" : "a rule assignment") +
                                             " and cannot be used as a value");
  }

  Value eval_node(const ConstExpr& c) const { return c.value; }

  Value eval_node(const TupleExpr& t) const {
    std::vector<Value> items;
    items.reserve(t.items.size());
    for (const Expr& e : t.items) items.push_back(eval(e));
    if (const auto* last = items.back().get_if<Tuple>()) {
      std::vector<Value> tail = last->items;
      items.pop_back();
      items.insert(items.end(), tail.begin(), tail.end());
    }
    return Value::tuple(std::move(items));
  }

  Value eval_node(const ProjExpr& p) const {
    Value base = eval(*p.of);
    const auto* t = base.get_if<Tuple>();
    if (!t) throw Error(ErrorKind::TypeMismatch, "projection [" + std::to_string(p.index) + "] of non-tuple " + to_string(base));
    if (p.index >= t->items.size()) {
      throw Error(ErrorKind::TypeMismatch, "projection [" + std::to_string(p.index) + "] out of range for " + to_string(base));
    }
    return t->items[p.index];
  }

  Value eval_node(const BuiltinExpr& b) const {
    const std::string name(builtin_name(b.fn));
    const std::size_t arity = b.fn == Builtin::Switch ? 2 : 1;
    if (b.args.size() != arity) {
      throw Error(ErrorKind::TypeMismatch, name + " takes " + std::to_string(arity) + " argument(s)");
    }
    switch (b.fn) {
      case Builtin::Port:
        return Value(env_.port_of(eval(b.args[0])));
      case Builtin::Switch: {
        const auto* z = std::get_if<VarExpr>(&b.args[1].node);
        if (!z || z->name == param_) {
          throw Error(ErrorKind::TypeMismatch, "switch: second argument must name an event variable");
        }
        return Value(env_.switch_of(eval(b.args[0]), lookup_event(gamma_, z->name)));
      }
      default:
        break;
    }
    Value v = eval(b.args[0]);
    const auto* pk = v.get_if<Packet>();
    if (!pk) throw Error(ErrorKind::TypeMismatch, name + " of non-packet " + to_string(v));
    HeaderField field = HeaderField::SrcIp;
    switch (b.fn) {
      case Builtin::SrcIp: field = HeaderField::SrcIp; break;
      case Builtin::DstIp: field = HeaderField::DstIp; break;
      case Builtin::SrcPort: field = HeaderField::SrcPort; break;
      case Builtin::DstPort: field = HeaderField::DstPort; break;
      default: field = HeaderField::InPort; break;
    }
    HeaderValue hv = pk->headers.get(field);
    if (const auto* ip = std::get_if<IpAddr>(&hv)) return Value(*ip);
    return Value::nat(std::get<std::uint64_t>(hv));
  }

  static std::optional<std::uint64_t> numeric(const Value& v) {
    if (const auto* n = v.get_if<Nat>()) return n->value;
    if (const auto* p = v.get_if<Port>()) return p->number;
    return std::nullopt;
  }

  Value eval_node(const CmpExpr& c) const {
    Value lhs = eval(*c.lhs);
    Value rhs = eval(*c.rhs);
    if (c.op == CmpOp::Eq || c.op == CmpOp::Ne) {
      bool eq = lhs == rhs;
      auto ln = numeric(lhs);
      auto rn = numeric(rhs);
      if (ln && rn) eq = *ln == *rn;
      return Value(c.op == CmpOp::Eq ? eq : !eq);
    }
    std::optional<std::uint64_t> ln = numeric(lhs), rn = numeric(rhs);
    if (!ln && lhs.is<IpAddr>() && rhs.is<IpAddr>()) {
      ln = lhs.as<IpAddr>().bits;
      rn = rhs.as<IpAddr>().bits;
    }
    if (!ln || !rn) {
      throw Error(ErrorKind::TypeMismatch, "cannot order " + to_string(lhs) + " and " + to_string(rhs));
    }
    return Value(c.op == CmpOp::Lt ? *ln < *rn : *ln <= *rn);
  }

  Value eval_node(const ArithExpr& a) const {
    Value lhs = eval(*a.lhs);
    Value rhs = eval(*a.rhs);
    auto ln = numeric(lhs);
    const auto* rn = rhs.get_if<Nat>();
    if (!ln || !rn) {
      throw Error(ErrorKind::TypeMismatch, "arithmetic needs a number and a nat, got " + to_string(lhs) + " and " +
                                               to_string(rhs));
    }
    if (a.op == ArithOp::Sub && rn->value > *ln) {
      throw Error(ErrorKind::TypeMismatch, "subtraction below zero: " + to_string(lhs) + " - " + to_string(rhs));
    }
    const std::uint64_t result = a.op == ArithOp::Add ? *ln + rn->value : *ln - rn->value;
    if (lhs.is<Port>()) return Value(Port{static_cast<std::uint32_t>(result)});
    return Value::nat(result);
  }

  const std::string& param_;
  const Value& arg_;
  const VariableState& gamma_;
  const FabricView& env_;
};

}  // namespace

Value eval_expr(const Expr& e, const std::string& param, const Value& arg, const VariableState& gamma,
                const FabricView& env) {
  return Evaluator(param, arg, gamma, env).eval(e);
}

}  // namespace imnet
