// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "imnet/ast.hpp"
#include "imnet/state.hpp"
#include "imnet/value.hpp"

namespace imnet {

/// Parses a whole program: definitions, the '>>' separator, then one or
/// more ';'-terminated statements. The grammar is in docs/grammar.ebnf.
/// Throws ParseError.
ast::Program parse_program(std::string_view source);

/// Parses a single lambda-body expression.
ast::Expr parse_expr(std::string_view source);

/// Parses a value literal in the canonical text form (see format.hpp).
Value parse_value(std::string_view source);

/// Parses what a variable may hold: `<...>` event, `[...]` rule list, or
/// `{(sw, [...]), ...}` rule assignment.
Binding parse_binding(std::string_view source);

}  // namespace imnet
