// SPDX-License-Identifier: Apache-2.0
#include "imnet/printer.hpp"

#include <vector>

#include "imnet/format.hpp"

namespace imnet {

namespace {

using namespace ast;

// Binding strength: comparison < arithmetic < postfix/primary.
enum Level { kCmp = 0, kArith = 1, kPostfix = 2 };

Level level_of(const Expr& e) {
  if (std::holds_alternative<CmpExpr>(e.node)) return kCmp;
  if (std::holds_alternative<ArithExpr>(e.node)) return kArith;
  return kPostfix;
}

std::string print_at(const Expr& e, Level min_level);

std::string print_const(const Value& v) {
  if (v.is<Nat>() || v.is<bool>() || v.is<IpAddr>()) return to_string(v);
  return "'" + to_string(v);
}

std::string print_node(const Expr& e) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, VarExpr>) {
          return x.name;
        } else if constexpr (std::is_same_v<T, ConstExpr>) {
          return print_const(x.value);
        } else if constexpr (std::is_same_v<T, TupleExpr>) {
          std::string out = "(";
          for (std::size_t i = 0; i < x.items.size(); ++i) {
            if (i > 0) out += ", ";
            out += print_at(x.items[i], kCmp);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, ProjExpr>) {
          return print_at(*x.of, kPostfix) + "[" + std::to_string(x.index) + "]";
        } else if constexpr (std::is_same_v<T, BuiltinExpr>) {
          std::string out = std::string(builtin_name(x.fn)) + "(";
          for (std::size_t i = 0; i < x.args.size(); ++i) {
            if (i > 0) out += ", ";
            out += print_at(x.args[i], kCmp);
          }
          return out + ")";
        } else if constexpr (std::is_same_v<T, CmpExpr>) {
          return print_at(*x.lhs, kArith) + " " + std::string(cmp_symbol(x.op)) + " " + print_at(*x.rhs, kArith);
        } else {
          return print_at(*x.lhs, kArith) + " " + std::string(arith_symbol(x.op)) + " " +
                 print_at(*x.rhs, kPostfix);
        }
      },
      e.node);
}

std::string print_at(const Expr& e, Level min_level) {
  std::string s = print_node(e);
  return level_of(e) < min_level ? "(" + s + ")" : s;
}

std::string print_lambda(const Lambda& l) { return "\\" + l.param + " -> " + print_expr(l.body); }

std::string print_seed(const ValueSet& seed) {
  return seed.items.empty() ? "" : to_string(Value(seed)) + ", ";
}

std::string print_atomic(const Stmt& s) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Assign>) return x.target + " := " + print_transformer(x.transformer);
        else if constexpr (std::is_same_v<T, AddRules>) return "AddRules(" + x.source + ")";
        else if constexpr (std::is_same_v<T, Register>) return "Register";
        else if constexpr (std::is_same_v<T, Send>) return "Send(" + x.source + ")";
        else return print_stmt(*x.first) + "; " + print_stmt(*x.second);
      },
      s.node);
}

void print_lines(const Stmt& s, const std::string& indent, std::vector<std::string>& out) {
  const Stmt* cur = &s;
  while (const auto* sq = std::get_if<Seq>(&cur->node)) {
    if (std::holds_alternative<Seq>(sq->first->node)) {
      out.push_back(indent + "{");
      print_lines(*sq->first, indent + "  ", out);
      out.push_back(indent + "}");
    } else {
      out.push_back(indent + print_atomic(*sq->first) + ";");
    }
    cur = sq->second.get();
  }
  out.push_back(indent + print_atomic(*cur) + ";");
}

}  // namespace

std::string print_expr(const Expr& e) { return print_at(e, kCmp); }

std::string print_transformer(const EventTransformer& et) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Lift>) return "Lift(" + x.source + ", " + print_lambda(x.fn) + ")";
        else if constexpr (std::is_same_v<T, ApplyLft>) return "ApplyLft(" + x.source + ", " + print_lambda(x.fn) + ")";
        else if constexpr (std::is_same_v<T, ApplyRit>) return "ApplyRit(" + x.source + ", " + print_lambda(x.fn) + ")";
        else if constexpr (std::is_same_v<T, Filter>) return "Filter(" + x.source + ", " + print_lambda(x.predicate) + ")";
        else if constexpr (std::is_same_v<T, Merge>) return "Merge(" + x.left + ", " + x.right + ")";
        else if constexpr (std::is_same_v<T, MixFst>) return "MixFst(" + print_seed(x.seed) + x.first + ", " + x.second + ")";
        else if constexpr (std::is_same_v<T, MixSnd>) return "MixSnd(" + print_seed(x.seed) + x.first + ", " + x.second + ")";
        else if constexpr (std::is_same_v<T, Once>) return "Once(" + x.source + ", " + std::to_string(x.count) + ")";
        else if constexpr (std::is_same_v<T, MakForwRule>) return "MakForwRule(" + x.source + ")";
        else return "MakeRule(" + x.source + ")";
      },
      et);
}

std::string print_stmt(const Stmt& s) { return print_atomic(s); }

std::string print_def(const Def& d) { return d.target + " := " + std::string(query_name(d.query)); }

std::string print_program(const Program& p) {
  std::vector<std::string> lines;
  for (const Def& d : p.defs) lines.push_back(print_def(d) + ";");
  lines.push_back(">>");
  print_lines(p.body, "", lines);
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    out += lines[i];
  }
  return out;
}

}  // namespace imnet
