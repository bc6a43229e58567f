// SPDX-License-Identifier: Apache-2.0
#include "imnet/lexer.hpp"

#include <cctype>
#include <optional>

#include "imnet/error.hpp"
#include "imnet/value.hpp"

namespace imnet {

std::string_view token_description(Tok kind) {
  switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Ip: return "IP address";
    case Tok::String: return "string";
    case Tok::Define: return "':='";
    case Tok::Separator: return "'>>'";
    case Tok::Arrow: return "'->'";
    case Tok::Backslash: return "'\\'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Amp: return "'&'";
    case Tok::Star: return "'*'";
    case Tok::Quote: return "'''";
    case Tok::EqEq: return "'=='";
    case Tok::NotEq: return "'!='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Equals: return "'='";
    case Tok::Underscore: return "'_'";
    case Tok::End: return "end of input";
  }
  return "?";
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const int line = line_;
      const int col = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", line, col});
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string word = take_while([](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; });
        out.push_back({word == "_" ? Tok::Underscore : Tok::Ident, word, line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        out.push_back(number(line, col));
      } else if (c == '"') {
        out.push_back(string(line, col));
      } else {
        out.push_back(punct(line, col));
      }
    }
  }

 private:
  template <class Pred>
  std::string take_while(Pred pred) {
    std::string s;
    while (pos_ < src_.size() && pred(src_[pos_])) s += advance();
    return s;
  }

  char advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  bool next_is(char c, std::size_t offset = 0) const {
    return pos_ + offset < src_.size() && src_[pos_ + offset] == c;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  Token number(int line, int col) {
    auto digits = [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; };
    std::string text = take_while(digits);
    if (!(next_is('.') && pos_ + 1 < src_.size() && digits(src_[pos_ + 1]))) {
      return {Tok::Number, text, line, col};
    }
    while (next_is('.') && pos_ + 1 < src_.size() && digits(src_[pos_ + 1])) {
      text += advance();
      text += take_while(digits);
    }
    if (!IpAddr::parse(text)) throw ParseError(line, col, "malformed IP address '" + text + "'");
    return {Tok::Ip, text, line, col};
  }

  Token string(int line, int col) {
    advance();
    std::string text;
    while (pos_ < src_.size() && src_[pos_] != '"' && src_[pos_] != '\n') text += advance();
    if (!next_is('"')) throw ParseError(line, col, "unterminated string");
    advance();
    return {Tok::String, text, line, col};
  }

  Token punct(int line, int col) {
    auto two = [&](char second, Tok kind, std::string text) -> std::optional<Token> {
      if (next_is(second, 1)) {
        advance();
        advance();
        return Token{kind, std::move(text), line, col};
      }
      return std::nullopt;
    };
    const char c = src_[pos_];
    std::optional<Token> t;
    switch (c) {
      case ':': t = two('=', Tok::Define, ":="); break;
      case '>': t = two('>', Tok::Separator, ">>"); break;
      case '-': t = two('>', Tok::Arrow, "->"); break;
      case '=': t = two('=', Tok::EqEq, "=="); break;
      case '!': t = two('=', Tok::NotEq, "!="); break;
      case '<': t = two('=', Tok::Le, "<="); break;
      default: break;
    }
    if (t) return *t;
    Tok kind;
    switch (c) {
      case '\\': kind = Tok::Backslash; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semi; break;
      case '&': kind = Tok::Amp; break;
      case '*': kind = Tok::Star; break;
      case '\'': kind = Tok::Quote; break;
      case '<': kind = Tok::Lt; break;
      case '>': kind = Tok::Gt; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '=': kind = Tok::Equals; break;
      default:
        throw ParseError(line, col, std::string("unexpected character '") + c + "'");
    }
    advance();
    return {kind, std::string(1, c), line, col};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace imnet
