// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "imnet/ast.hpp"

namespace imnet {

/// Canonical source text; parse_program(print_program(p)) == p.
std::string print_program(const ast::Program& p);

/// Source of a single statement without the trailing ';'. Sequences print
/// as their statements joined by "; ".
std::string print_stmt(const ast::Stmt& s);
std::string print_def(const ast::Def& d);
std::string print_transformer(const ast::EventTransformer& et);
std::string print_expr(const ast::Expr& e);

}  // namespace imnet
