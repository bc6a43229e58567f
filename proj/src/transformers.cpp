// SPDX-License-Identifier: Apache-2.0
#include "imnet/transformers.hpp"

#include "imnet/error.hpp"
#include "imnet/eval.hpp"
#include "imnet/format.hpp"
#include "imnet/type.hpp"

namespace imnet {

namespace {

std::string at_index(std::string_view x, std::size_t i) {
  return std::string(x) + "[" + std::to_string(i) + "]";
}

// Runs body for element i, prefixing any error with the element position.
template <class F>
auto with_index(std::string_view x, std::size_t i, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    throw Error(e.kind(), at_index(x, i) + ": " + e.what());
  }
}

Event checked(Event ev) {
  event_typecheck(ev);
  return ev;
}

const Tuple& require_tuple(std::string_view x, std::size_t i, const Value& v, std::size_t arity) {
  const auto* t = v.get_if<Tuple>();
  if (!t || t->items.size() != arity) {
    throw Error(ErrorKind::Shape,
                at_index(x, i) + ": expected a " + std::to_string(arity) + "-tuple, got " + to_string(v));
  }
  return *t;
}

void require_same_length(std::string_view x1, const Event& a, std::string_view x2, const Event& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::LengthMismatch, "'" + std::string(x1) + "' has " + std::to_string(a.size()) +
                                               " elements but '" + std::string(x2) + "' has " +
                                               std::to_string(b.size()));
  }
}

enum class Side { First, Second };

Event apply_side(Side side, std::string_view x, const ast::Lambda& f, const VariableState& gamma,
                 const FabricView& env) {
  const Event& in = lookup_event(gamma, x);
  Event out;
  out.values.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    const Tuple& pair = require_tuple(x, i, in.values[i], 2);
    const std::size_t k = side == Side::First ? 0 : 1;
    Value mapped = with_index(x, i, [&] { return apply_lambda(f, pair.items[k], gamma, env); });
    std::vector<Value> items = pair.items;
    items[k] = std::move(mapped);
    out.values.push_back(Value::tuple(std::move(items)));
  }
  return checked(std::move(out));
}

Event mix(Side side, const ValueSet& seed, std::string_view x1, std::string_view x2, const VariableState& gamma) {
  const Event& e1 = lookup_event(gamma, x1);
  const Event& e2 = lookup_event(gamma, x2);
  require_same_length(x1, e1, x2, e2);
  const Event& acc_from = side == Side::First ? e1 : e2;
  const Event& kept = side == Side::First ? e2 : e1;
  ValueSet acc = seed;
  Event out;
  out.values.reserve(e1.size());
  for (std::size_t i = 0; i < e1.size(); ++i) {
    acc.insert(acc_from.values[i]);
    if (side == Side::First) {
      out.values.push_back(Value::tuple({Value(acc), kept.values[i]}));
    } else {
      out.values.push_back(Value::tuple({kept.values[i], Value(acc)}));
    }
  }
  return checked(std::move(out));
}

Action build_action(std::string_view x, std::size_t i, const Value& ctor, const Value& arg) {
  const bool wildcard = arg.is<Wildcard>();
  if (const auto* a = ctor.get_if<Action>()) {
    if (!wildcard) {
      throw Error(ErrorKind::ArityMismatch,
                  at_index(x, i) + ": action " + to_string(*a) + " takes no argument, got " + to_string(arg));
    }
    return *a;
  }
  const auto* c = ctor.get_if<ActionCtor>();
  if (!c) {
    throw Error(ErrorKind::Shape, at_index(x, i) + ": second component must be an action, got " + to_string(ctor));
  }
  if (wildcard) {
    throw Error(ErrorKind::ArityMismatch, at_index(x, i) + ": " + to_string(*c) + " needs an argument, got _");
  }
  if (c->kind == ActionCtor::Kind::SendOut) {
    if (const auto* p = arg.get_if<Port>()) return SendOut{*p};
    if (const auto* n = arg.get_if<Nat>()) {
      if (n->value > UINT32_MAX) throw Error(ErrorKind::InvalidValue, at_index(x, i) + ": port out of range");
      return SendOut{Port{static_cast<std::uint32_t>(n->value)}};
    }
    throw Error(ErrorKind::TypeMismatch, at_index(x, i) + ": sendout needs a port, got " + to_string(arg));
  }
  HeaderValue hv;
  if (const auto* n = arg.get_if<Nat>()) {
    hv = n->value;
  } else if (const auto* p = arg.get_if<Port>()) {
    hv = std::uint64_t{p->number};
  } else if (const auto* ip = arg.get_if<IpAddr>()) {
    hv = *ip;
  } else {
    throw Error(ErrorKind::TypeMismatch, at_index(x, i) + ": " + to_string(*c) + " cannot take " + to_string(arg));
  }
  if (!c->field || !header_value_fits(*c->field, hv)) {
    throw Error(ErrorKind::TypeMismatch, at_index(x, i) + ": " + to_string(*c) + " cannot take " + to_string(arg));
  }
  return Change{*c->field, hv};
}

}  // namespace

Event eval_lift(std::string_view x, const ast::Lambda& f, const VariableState& gamma, const FabricView& env) {
  const Event& in = lookup_event(gamma, x);
  Event out;
  out.values.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    out.values.push_back(with_index(x, i, [&] { return apply_lambda(f, in.values[i], gamma, env); }));
  }
  return checked(std::move(out));
}

Event eval_apply_left(std::string_view x, const ast::Lambda& f, const VariableState& gamma, const FabricView& env) {
  return apply_side(Side::First, x, f, gamma, env);
}

Event eval_apply_right(std::string_view x, const ast::Lambda& f, const VariableState& gamma, const FabricView& env) {
  return apply_side(Side::Second, x, f, gamma, env);
}

Event eval_merge(std::string_view x1, std::string_view x2, const VariableState& gamma) {
  const Event& a = lookup_event(gamma, x1);
  const Event& b = lookup_event(gamma, x2);
  require_same_length(x1, a, x2, b);
  Event out;
  out.values.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.values.push_back(Value::tuple({a.values[i], b.values[i]}));
  return checked(std::move(out));
}

Event eval_filter(std::string_view x, const ast::Lambda& p, const VariableState& gamma, const FabricView& env) {
  const Event& in = lookup_event(gamma, x);
  Event out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    Value keep = with_index(x, i, [&] { return apply_lambda(p, in.values[i], gamma, env); });
    const bool* b = keep.get_if<bool>();
    if (!b) {
      throw Error(ErrorKind::PredicateType, at_index(x, i) + ": predicate returned " + to_string(keep));
    }
    if (*b) out.values.push_back(in.values[i]);
  }
  return checked(std::move(out));
}

Event eval_once(std::string_view x, std::uint64_t n, const VariableState& gamma) {
  const Binding& b = lookup(gamma, x);
  Value v = Value::nat(0);
  if (const auto* ev = std::get_if<Event>(&b)) {
    if (ev->size() != 1) {
      throw Error(ErrorKind::Shape, "Once: '" + std::string(x) + "' must hold a single value, got an event of " +
                                        std::to_string(ev->size()));
    }
    v = ev->values.front();
  } else if (const auto* rl = std::get_if<RuleList>(&b)) {
    v = *rl;
  } else {
    throw Error(ErrorKind::Shape, "Once: '" + std::string(x) + "' holds a rule assignment, not a value");
  }
  Event out;
  out.values.assign(n, v);
  return checked(std::move(out));
}

Event eval_mix_fst(const ValueSet& seed, std::string_view x1, std::string_view x2, const VariableState& gamma) {
  return mix(Side::First, seed, x1, x2, gamma);
}

Event eval_mix_snd(const ValueSet& seed, std::string_view x1, std::string_view x2, const VariableState& gamma) {
  return mix(Side::Second, seed, x1, x2, gamma);
}

InitialRuleAssignment eval_mak_forw_rule(std::string_view x, const VariableState& gamma) {
  const Event& in = lookup_event(gamma, x);
  InitialRuleAssignment out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const Tuple& t = require_tuple(x, i, in.values[i], 3);
    const auto* id = t.items[0].get_if<SwitchId>();
    const auto* pr = t.items[1].get_if<Port>();
    const auto* pk = t.items[2].get_if<Packet>();
    if (!id || !pr || !pk) {
      throw Error(ErrorKind::Shape,
                  at_index(x, i) + ": expected (switch, port, packet), got " + to_string(in.values[i]));
    }
    RuleList rl;
    rl.rules.emplace_back(Pattern::exact(pk->headers), std::vector<Action>{SendOut{*pr}});
    out.bindings.push_back(RuleBinding{*id, std::move(rl)});
  }
  return out;
}

RuleList eval_make_rule(std::string_view x, const VariableState& gamma) {
  const Event& in = lookup_event(gamma, x);
  RuleList out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const Tuple& t = require_tuple(x, i, in.values[i], 3);
    const auto* pat = t.items[0].get_if<Pattern>();
    if (!pat) {
      throw Error(ErrorKind::Shape, at_index(x, i) + ": first component must be a pattern, got " +
                                        to_string(t.items[0]));
    }
    out.rules.emplace_back(*pat, std::vector<Action>{build_action(x, i, t.items[1], t.items[2])});
  }
  return out;
}

Binding eval_transformer(const ast::EventTransformer& et, const VariableState& gamma, const FabricView& env) {
  return std::visit(
      [&](const auto& t) -> Binding {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, ast::Lift>) return eval_lift(t.source, t.fn, gamma, env);
        else if constexpr (std::is_same_v<T, ast::ApplyLft>) return eval_apply_left(t.source, t.fn, gamma, env);
        else if constexpr (std::is_same_v<T, ast::ApplyRit>) return eval_apply_right(t.source, t.fn, gamma, env);
        else if constexpr (std::is_same_v<T, ast::Merge>) return eval_merge(t.left, t.right, gamma);
        else if constexpr (std::is_same_v<T, ast::MixFst>) return eval_mix_fst(t.seed, t.first, t.second, gamma);
        else if constexpr (std::is_same_v<T, ast::MixSnd>) return eval_mix_snd(t.seed, t.first, t.second, gamma);
        else if constexpr (std::is_same_v<T, ast::Filter>) return eval_filter(t.source, t.predicate, gamma, env);
        else if constexpr (std::is_same_v<T, ast::Once>) return eval_once(t.source, t.count, gamma);
        else if constexpr (std::is_same_v<T, ast::MakForwRule>) return eval_mak_forw_rule(t.source, gamma);
        else return eval_make_rule(t.source, gamma);
      },
      et);
}

}  // namespace imnet
