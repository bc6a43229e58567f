// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "imnet/error.hpp"
#include "imnet/format.hpp"
#include "imnet/parser.hpp"
#include "imnet/printer.hpp"
#include "support/generators.hpp"

namespace imnet {
namespace {

using namespace ast;
using testing::Gen;

TEST(PropertySyntax, ProgramRoundTrip) {
  for (int c = 0; c < 1000; ++c) {
    Gen g(30000 + c);
    const Program p = testing::gen_any_program(g);
    const std::string text = print_program(p);
    Program back;
    try {
      back = parse_program(text);
    } catch (const Error& e) {
      FAIL() << "case " << c << ": " << e.what() << "\n" << text;
    }
    EXPECT_TRUE(back == p) << "case " << c << "\n" << text << "\n---\n" << print_program(back);
    EXPECT_EQ(print_program(back), text) << "case " << c;
  }
}

TEST(PropertySyntax, ExpressionRoundTrip) {
  for (int c = 0; c < 1000; ++c) {
    Gen g(31000 + c);
    const Expr e = testing::gen_any_expr(g, {"t", "z", "rules"}, 4);
    const std::string text = print_expr(e);
    EXPECT_TRUE(parse_expr(text) == e) << "case " << c << ": " << text;
  }
}

TEST(PropertySyntax, ValueLiteralRoundTrip) {
  for (int c = 0; c < 1000; ++c) {
    Gen g(32000 + c);
    const Value v = testing::gen_value(g, 3);
    const std::string text = to_string(v);
    EXPECT_EQ(parse_value(text), v) << "case " << c << ": " << text;
  }
}

TEST(PropertySyntax, BindingLiteralRoundTrip) {
  for (int c = 0; c < 300; ++c) {
    Gen g(33000 + c);
    Binding b;
    switch (g.uniform(0, 2)) {
      case 0: b = testing::gen_event(g, testing::gen_type(g), 5); break;
      case 1: b = testing::gen_rule_list(g); break;
      default: {
        InitialRuleAssignment ir;
        for (std::size_t i = 0, n = g.uniform(0, 3); i < n; ++i) {
          ir.bindings.push_back(RuleBinding{testing::gen_switch(g), testing::gen_rule_list(g)});
        }
        b = ir;
      }
    }
    EXPECT_EQ(parse_binding(to_string(b)), b) << to_string(b);
  }
}

}  // namespace
}  // namespace imnet
