// SPDX-License-Identifier: Apache-2.0
#include "imnet/ast.hpp"

#include <array>

#include "imnet/error.hpp"

namespace imnet {

std::string_view query_name(QueryName q) {
  switch (q) {
    case QueryName::SwitchIds: return "SwitchIds";
    case QueryName::SourceIps: return "SourceIps";
    case QueryName::ArrivedPackets: return "ArrivedPackets";
  }
  return "?";
}

std::optional<QueryName> query_from_name(std::string_view name) {
  for (QueryName q : {QueryName::SwitchIds, QueryName::SourceIps, QueryName::ArrivedPackets}) {
    if (query_name(q) == name) return q;
  }
  return std::nullopt;
}

bool is_reserved_word(std::string_view word) {
  static constexpr std::array<std::string_view, 33> kReserved = {
      "Lift",     "ApplyLft", "ApplyRit", "Merge",          "MixFst",  "MixSnd",        "Filter",
      "Once",     "MakForwRule", "MakeRule", "AddRules",    "Register", "Send",         "SwitchIds",
      "SourceIps", "ArrivedPackets", "true", "false",       "port",    "switch",        "srcip",
      "dstip",    "srcport",  "dstport",  "inport",         "ethsrc",  "ethdst",        "sendall",
      "sendcontroller", "sendout", "change", "payload",     "_"};
  for (std::string_view r : kReserved) {
    if (r == word) return true;
  }
  return false;
}

namespace ast {

std::string_view builtin_name(Builtin b) {
  switch (b) {
    case Builtin::Port: return "port";
    case Builtin::Switch: return "switch";
    case Builtin::SrcIp: return "srcip";
    case Builtin::DstIp: return "dstip";
    case Builtin::SrcPort: return "srcport";
    case Builtin::DstPort: return "dstport";
    case Builtin::InPort: return "inport";
  }
  return "?";
}

std::optional<Builtin> builtin_from_name(std::string_view name) {
  for (Builtin b : {Builtin::Port, Builtin::Switch, Builtin::SrcIp, Builtin::DstIp, Builtin::SrcPort,
                    Builtin::DstPort, Builtin::InPort}) {
    if (builtin_name(b) == name) return b;
  }
  return std::nullopt;
}

std::string_view cmp_symbol(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "==";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
  }
  return "?";
}

std::string_view arith_symbol(ArithOp op) { return op == ArithOp::Add ? "+" : "-"; }

namespace {

bool same(const ExprPtr& a, const ExprPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, VarExpr>) return x.name == y.name;
        else if constexpr (std::is_same_v<T, ConstExpr>) return x.value == y.value;
        else if constexpr (std::is_same_v<T, TupleExpr>) return x.items == y.items;
        else if constexpr (std::is_same_v<T, ProjExpr>) return x.index == y.index && same(x.of, y.of);
        else if constexpr (std::is_same_v<T, BuiltinExpr>) return x.fn == y.fn && x.args == y.args;
        else return x.op == y.op && same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
      },
      a.node);
}

Expr var(std::string name) { return Expr{VarExpr{std::move(name)}}; }
Expr constant(Value v) { return Expr{ConstExpr{std::move(v)}}; }
Expr tuple(std::vector<Expr> items) { return Expr{TupleExpr{std::move(items)}}; }
Expr proj(std::size_t index, Expr of) {
  return Expr{ProjExpr{index, std::make_shared<const Expr>(std::move(of))}};
}
Expr call(Builtin fn, std::vector<Expr> args) { return Expr{BuiltinExpr{fn, std::move(args)}}; }
Expr cmp(CmpOp op, Expr lhs, Expr rhs) {
  return Expr{CmpExpr{op, std::make_shared<const Expr>(std::move(lhs)), std::make_shared<const Expr>(std::move(rhs))}};
}
Expr arith(ArithOp op, Expr lhs, Expr rhs) {
  return Expr{
      ArithExpr{op, std::make_shared<const Expr>(std::move(lhs)), std::make_shared<const Expr>(std::move(rhs))}};
}

bool operator==(const Seq& a, const Seq& b) {
  auto same_stmt = [](const StmtPtr& x, const StmtPtr& y) { return x == y || (x && y && *x == *y); };
  return same_stmt(a.first, b.first) && same_stmt(a.second, b.second);
}

bool operator==(const Stmt& a, const Stmt& b) { return a.node == b.node; }

Stmt seq(Stmt first, Stmt second) {
  return Stmt{Seq{std::make_shared<const Stmt>(std::move(first)), std::make_shared<const Stmt>(std::move(second))}};
}

Stmt sequence(std::vector<Stmt> stmts) {
  if (stmts.empty()) throw Error(ErrorKind::InvalidValue, "empty statement sequence");
  Stmt out = std::move(stmts.back());
  for (std::size_t i = stmts.size() - 1; i-- > 0;) out = seq(std::move(stmts[i]), std::move(out));
  return out;
}

}  // namespace ast
}  // namespace imnet
