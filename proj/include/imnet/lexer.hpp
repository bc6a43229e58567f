// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace imnet {

enum class Tok {
  Ident,
  Number,
  Ip,
  String,
  Define,     // :=
  Separator,  // >>
  Arrow,      // ->
  Backslash,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Semi,
  Amp,
  Star,
  Quote,
  EqEq,
  NotEq,
  Lt,
  Le,
  Gt,
  Plus,
  Minus,
  Equals,
  Underscore,
  End,
};

std::string_view token_description(Tok kind);

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

/// Splits source into tokens. '#' starts a comment running to end of line.
/// Throws ParseError on characters outside the grammar.
std::vector<Token> tokenize(std::string_view source);

}  // namespace imnet
