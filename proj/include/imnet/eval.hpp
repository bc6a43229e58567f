// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "imnet/ast.hpp"
#include "imnet/fabric.hpp"
#include "imnet/state.hpp"
#include "imnet/value.hpp"

namespace imnet {

/// Call-by-value evaluation of a lambda body with `param` bound to `arg`.
/// Free names resolve to the bound parameter first, then to rule-list
/// variables in gamma. Event variables are only legal as the second
/// argument of switch(). Never mutates gamma or the fabric.
///
/// Throws UnboundVariable, TypeMismatch, UnknownHost, SwitchNotInEvent.
Value eval_expr(const ast::Expr& e, const std::string& param, const Value& arg, const VariableState& gamma,
                const FabricView& env);

/// Applies a lambda to one value.
inline Value apply_lambda(const ast::Lambda& fn, const Value& arg, const VariableState& gamma,
                          const FabricView& env) {
  return eval_expr(fn.body, fn.param, arg, gamma, env);
}

}  // namespace imnet
