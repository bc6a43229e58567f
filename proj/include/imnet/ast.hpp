// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "imnet/value.hpp"

namespace imnet {

enum class QueryName { SwitchIds, SourceIps, ArrivedPackets };

std::string_view query_name(QueryName q);
std::optional<QueryName> query_from_name(std::string_view name);

namespace ast {

// ---- Expressions (lambda bodies and predicates) ----

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class Builtin { Port, Switch, SrcIp, DstIp, SrcPort, DstPort, InPort };
enum class CmpOp { Eq, Ne, Lt, Le };
enum class ArithOp { Add, Sub };

std::string_view builtin_name(Builtin b);
std::optional<Builtin> builtin_from_name(std::string_view name);
std::string_view cmp_symbol(CmpOp op);
std::string_view arith_symbol(ArithOp op);

struct VarExpr {
  std::string name;
};
struct ConstExpr {
  Value value;
};
/// Builds a tuple; a tuple-valued last element is spliced in, so
/// (v, (a, b)) evaluates to (v, a, b).
struct TupleExpr {
  std::vector<Expr> items;
};
/// Zero-based tuple projection, written `e[i]`.
struct ProjExpr {
  std::size_t index;
  ExprPtr of;
};
struct BuiltinExpr {
  Builtin fn;
  std::vector<Expr> args;
};
struct CmpExpr {
  CmpOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct ArithExpr {
  ArithOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  std::variant<VarExpr, ConstExpr, TupleExpr, ProjExpr, BuiltinExpr, CmpExpr, ArithExpr> node;
};

bool operator==(const Expr& a, const Expr& b);

Expr var(std::string name);
Expr constant(Value v);
Expr tuple(std::vector<Expr> items);
Expr proj(std::size_t index, Expr of);
Expr call(Builtin fn, std::vector<Expr> args);
Expr cmp(CmpOp op, Expr lhs, Expr rhs);
Expr arith(ArithOp op, Expr lhs, Expr rhs);

struct Lambda {
  std::string param;
  Expr body;

  bool operator==(const Lambda&) const = default;
};

// ---- Event transformers ----

struct Lift {
  std::string source;
  Lambda fn;
  bool operator==(const Lift&) const = default;
};
struct ApplyLft {
  std::string source;
  Lambda fn;
  bool operator==(const ApplyLft&) const = default;
};
struct ApplyRit {
  std::string source;
  Lambda fn;
  bool operator==(const ApplyRit&) const = default;
};
struct Merge {
  std::string left;
  std::string right;
  bool operator==(const Merge&) const = default;
};
struct MixFst {
  ValueSet seed;
  std::string first;
  std::string second;
  bool operator==(const MixFst&) const = default;
};
struct MixSnd {
  ValueSet seed;
  std::string first;
  std::string second;
  bool operator==(const MixSnd&) const = default;
};
struct Filter {
  std::string source;
  Lambda predicate;
  bool operator==(const Filter&) const = default;
};
struct Once {
  std::string source;
  std::uint64_t count = 0;
  bool operator==(const Once&) const = default;
};
struct MakForwRule {
  std::string source;
  bool operator==(const MakForwRule&) const = default;
};
struct MakeRule {
  std::string source;
  bool operator==(const MakeRule&) const = default;
};

using EventTransformer =
    std::variant<Lift, ApplyLft, ApplyRit, Merge, MixFst, MixSnd, Filter, Once, MakForwRule, MakeRule>;

// ---- Statements and programs ----

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Assign {
  std::string target;
  EventTransformer transformer;
  bool operator==(const Assign&) const = default;
};
struct Seq {
  StmtPtr first;
  StmtPtr second;
};
struct AddRules {
  std::string source;
  bool operator==(const AddRules&) const = default;
};
struct Register {
  bool operator==(const Register&) const = default;
};
struct Send {
  std::string source;
  bool operator==(const Send&) const = default;
};

struct Stmt {
  std::variant<Assign, Seq, AddRules, Register, Send> node;
};

bool operator==(const Seq& a, const Seq& b);
bool operator==(const Stmt& a, const Stmt& b);

Stmt seq(Stmt first, Stmt second);
/// Right-nested sequence s0; (s1; (...; sn)). Requires at least one statement.
Stmt sequence(std::vector<Stmt> stmts);

struct Def {
  std::string target;
  QueryName query;
  bool operator==(const Def&) const = default;
};

struct Program {
  std::vector<Def> defs;
  Stmt body;
  bool operator==(const Program&) const = default;
};

}  // namespace ast

/// Words that cannot be used as variable names or switch identifiers.
bool is_reserved_word(std::string_view word);

}  // namespace imnet
