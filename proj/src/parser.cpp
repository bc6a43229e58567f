// SPDX-License-Identifier: Apache-2.0
#include "imnet/parser.hpp"

#include <charconv>
#include <limits>

#include "imnet/error.hpp"
#include "imnet/lexer.hpp"
#include "imnet/type.hpp"

namespace imnet {

namespace {

using namespace ast;

bool is_packet_name(std::string_view word) {
  if (word.size() < 3 || word.substr(0, 2) != "pk") return false;
  for (char c : word.substr(2)) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view source) : toks_(tokenize(source)) {}

  Program program() {
    std::vector<Def> defs;
    for (;;) {
      if (accept(Tok::Separator)) break;
      if (at(Tok::Ident) && peek(1).kind == Tok::Define) {
        defs.push_back(definition(defs));
        continue;
      }
      fail({"'>>'", "definition"});
    }
    Stmt body = statements(Tok::End);
    expect(Tok::End);
    return Program{std::move(defs), std::move(body)};
  }

  Expr whole_expr() {
    Expr e = expr();
    expect(Tok::End);
    return e;
  }

  Value whole_value() {
    Value v = value();
    expect(Tok::End);
    return v;
  }

  Binding whole_binding() {
    Binding b = binding();
    expect(Tok::End);
    if (const auto* ev = std::get_if<Event>(&b)) event_typecheck(*ev);
    return b;
  }

 private:
  // ---- token plumbing ----

  const Token& peek(std::size_t k = 0) const {
    const std::size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_word(std::string_view word) const { return at(Tok::Ident) && peek().text == word; }

  bool accept(Tok kind) {
    if (!at(kind)) return false;
    ++pos_;
    return true;
  }

  const Token& expect(Tok kind) {
    if (!at(kind)) fail({std::string(token_description(kind))});
    return toks_[pos_++];
  }

  void expect_word(std::string_view word) {
    if (!at_word(word)) fail({"'" + std::string(word) + "'"});
    ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const { fail_at(peek(), std::move(expected)); }

  [[noreturn]] static void fail_at(const Token& t, std::vector<std::string> expected) {
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.line, t.column, std::move(expected), found);
  }

  std::uint64_t number() {
    const Token& t = expect(Tok::Number);
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
    if (ec != std::errc{}) throw ParseError(t.line, t.column, "number out of range '" + t.text + "'");
    return n;
  }

  Port port_number() {
    const Token& t = peek();
    const std::uint64_t n = number();
    if (n > std::numeric_limits<std::uint32_t>::max()) throw ParseError(t.line, t.column, "port number out of range");
    return Port{static_cast<std::uint32_t>(n)};
  }

  std::string identifier(std::string_view what) {
    if (!at(Tok::Ident) || is_reserved_word(peek().text)) fail({std::string(what)});
    return toks_[pos_++].text;
  }

  // ---- programs ----

  Def definition(const std::vector<Def>& earlier) {
    const Token& name_tok = peek();
    if (is_reserved_word(name_tok.text)) {
      // A statement keyword before '>>' means the separator is missing.
      fail({"'>>'"});
    }
    const Token& q = peek(2);
    auto query = q.kind == Tok::Ident ? query_from_name(q.text) : std::nullopt;
    if (!query) {
      if (q.kind == Tok::Ident && !is_reserved_word(q.text)) {
        fail_at(q, {"query name (SwitchIds, SourceIps, ArrivedPackets)"});
      }
      fail({"'>>'"});
    }
    for (const Def& d : earlier) {
      if (d.target == name_tok.text) {
        throw ParseError(name_tok.line, name_tok.column, "variable '" + name_tok.text + "' defined twice");
      }
    }
    std::string target = name_tok.text;
    pos_ += 3;
    expect(Tok::Semi);
    return Def{std::move(target), *query};
  }

  Stmt statements(Tok terminator) {
    std::vector<Stmt> out;
    do {
      out.push_back(statement());
    } while (!at(terminator));
    return sequence(std::move(out));
  }

  Stmt statement() {
    if (accept(Tok::LBrace)) {
      Stmt block = statements(Tok::RBrace);
      expect(Tok::RBrace);
      return block;
    }
    if (at_word("Register")) {
      ++pos_;
      expect(Tok::Semi);
      return Stmt{Register{}};
    }
    if (at_word("AddRules") || at_word("Send")) {
      const bool add = at_word("AddRules");
      ++pos_;
      expect(Tok::LParen);
      std::string x = identifier("variable name");
      expect(Tok::RParen);
      expect(Tok::Semi);
      return add ? Stmt{AddRules{std::move(x)}} : Stmt{Send{std::move(x)}};
    }
    if (at(Tok::Ident) && !is_reserved_word(peek().text)) {
      std::string target = toks_[pos_++].text;
      expect(Tok::Define);
      EventTransformer et = transformer();
      expect(Tok::Semi);
      return Stmt{Assign{std::move(target), std::move(et)}};
    }
    fail({"statement"});
  }

  EventTransformer transformer() {
    if (!at(Tok::Ident)) fail({"event transformer"});
    const std::string name = peek().text;
    auto unary_lambda = [&]() {
      ++pos_;
      expect(Tok::LParen);
      std::string x = identifier("variable name");
      expect(Tok::Comma);
      Lambda fn = lambda();
      expect(Tok::RParen);
      return std::make_pair(std::move(x), std::move(fn));
    };
    auto single_var = [&]() {
      ++pos_;
      expect(Tok::LParen);
      std::string x = identifier("variable name");
      expect(Tok::RParen);
      return x;
    };
    auto mix = [&]() {
      ++pos_;
      expect(Tok::LParen);
      ValueSet seed;
      if (at(Tok::LBrace)) {
        seed = value_set();
        expect(Tok::Comma);
      }
      std::string a = identifier("variable name");
      expect(Tok::Comma);
      std::string b = identifier("variable name");
      expect(Tok::RParen);
      return std::make_tuple(std::move(seed), std::move(a), std::move(b));
    };

    if (name == "Lift") {
      auto [x, fn] = unary_lambda();
      return Lift{std::move(x), std::move(fn)};
    }
    if (name == "ApplyLft") {
      auto [x, fn] = unary_lambda();
      return ApplyLft{std::move(x), std::move(fn)};
    }
    if (name == "ApplyRit") {
      auto [x, fn] = unary_lambda();
      return ApplyRit{std::move(x), std::move(fn)};
    }
    if (name == "Filter") {
      auto [x, fn] = unary_lambda();
      return Filter{std::move(x), std::move(fn)};
    }
    if (name == "Merge") {
      ++pos_;
      expect(Tok::LParen);
      std::string a = identifier("variable name");
      expect(Tok::Comma);
      std::string b = identifier("variable name");
      expect(Tok::RParen);
      return Merge{std::move(a), std::move(b)};
    }
    if (name == "MixFst") {
      auto [seed, a, b] = mix();
      return MixFst{std::move(seed), std::move(a), std::move(b)};
    }
    if (name == "MixSnd") {
      auto [seed, a, b] = mix();
      return MixSnd{std::move(seed), std::move(a), std::move(b)};
    }
    if (name == "Once") {
      ++pos_;
      expect(Tok::LParen);
      std::string x = identifier("variable name");
      expect(Tok::Comma);
      const std::uint64_t n = number();
      expect(Tok::RParen);
      return Once{std::move(x), n};
    }
    if (name == "MakForwRule") return MakForwRule{single_var()};
    if (name == "MakeRule") return MakeRule{single_var()};
    fail({"event transformer"});
  }

  Lambda lambda() {
    expect(Tok::Backslash);
    std::string param = identifier("lambda parameter");
    expect(Tok::Arrow);
    return Lambda{std::move(param), expr()};
  }

  // ---- expressions ----

  Expr expr() {
    Expr lhs = arith_expr();
    std::optional<CmpOp> op;
    if (at(Tok::EqEq)) op = CmpOp::Eq;
    else if (at(Tok::NotEq)) op = CmpOp::Ne;
    else if (at(Tok::Lt)) op = CmpOp::Lt;
    else if (at(Tok::Le)) op = CmpOp::Le;
    if (!op) return lhs;
    ++pos_;
    return cmp(*op, std::move(lhs), arith_expr());
  }

  Expr arith_expr() {
    Expr lhs = postfix_expr();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const ArithOp op = at(Tok::Plus) ? ArithOp::Add : ArithOp::Sub;
      ++pos_;
      lhs = arith(op, std::move(lhs), postfix_expr());
    }
    return lhs;
  }

  Expr postfix_expr() {
    Expr e = primary_expr();
    while (accept(Tok::LBracket)) {
      const std::uint64_t index = number();
      expect(Tok::RBracket);
      e = proj(index, std::move(e));
    }
    return e;
  }

  Expr primary_expr() {
    if (accept(Tok::LParen)) {
      std::vector<Expr> items;
      items.push_back(expr());
      while (accept(Tok::Comma)) items.push_back(expr());
      expect(Tok::RParen);
      if (items.size() == 1) return std::move(items[0]);
      return tuple(std::move(items));
    }
    if (at(Tok::Number)) return constant(Value::nat(number()));
    if (at(Tok::Ip)) return constant(Value(*IpAddr::parse(toks_[pos_++].text)));
    if (accept(Tok::Quote)) return constant(value());
    if (at_word("true") || at_word("false")) {
      const bool b = peek().text == "true";
      ++pos_;
      return constant(Value(b));
    }
    if (at(Tok::Ident)) {
      if (auto fn = builtin_from_name(peek().text)) {
        ++pos_;
        expect(Tok::LParen);
        std::vector<Expr> args;
        args.push_back(expr());
        while (accept(Tok::Comma)) args.push_back(expr());
        expect(Tok::RParen);
        return call(*fn, std::move(args));
      }
      if (!is_reserved_word(peek().text)) return var(toks_[pos_++].text);
    }
    fail({"expression"});
  }

  // ---- value literals ----

  HeaderValue header_value(HeaderField field) {
    const Token& t = peek();
    HeaderValue v;
    if (at(Tok::Ip)) {
      v = *IpAddr::parse(toks_[pos_++].text);
    } else if (at(Tok::Number)) {
      v = number();
    } else {
      fail({"number", "IP address"});
    }
    if (!header_value_fits(field, v)) {
      fail_at(t, {field_holds_ip(field) ? "IP address" : "number"});
    }
    return v;
  }

  HeaderField header_field() {
    auto f = at(Tok::Ident) ? field_from_name(peek().text) : std::nullopt;
    if (!f) fail({"header field"});
    ++pos_;
    return *f;
  }

  Pattern pattern() {
    if (accept(Tok::Star)) return Pattern{};
    Pattern p;
    do {
      const Token& t = peek();
      const HeaderField f = header_field();
      expect(Tok::LParen);
      HeaderValue v = header_value(f);
      expect(Tok::RParen);
      if (p.constraints().count(f)) {
        throw ParseError(t.line, t.column, "duplicate constraint on " + std::string(field_name(f)));
      }
      p.constrain(f, std::move(v));
    } while (accept(Tok::Amp));
    return p;
  }

  Action action() {
    if (at_word("sendall")) {
      ++pos_;
      return SendAll{};
    }
    if (at_word("sendcontroller")) {
      ++pos_;
      return SendController{};
    }
    if (at_word("sendout")) {
      ++pos_;
      expect(Tok::LParen);
      Port p = port_number();
      expect(Tok::RParen);
      return SendOut{p};
    }
    if (at_word("change")) {
      ++pos_;
      expect(Tok::LParen);
      const HeaderField f = header_field();
      expect(Tok::Comma);
      HeaderValue v = header_value(f);
      expect(Tok::RParen);
      return Change{f, std::move(v)};
    }
    fail({"action"});
  }

  Rule rule() {
    expect(Tok::LParen);
    Pattern p = pattern();
    expect(Tok::Comma);
    expect(Tok::LBracket);
    std::vector<Action> actions;
    actions.push_back(action());
    while (accept(Tok::Comma)) actions.push_back(action());
    expect(Tok::RBracket);
    expect(Tok::RParen);
    return Rule(std::move(p), std::move(actions));
  }

  RuleList rule_list() {
    expect(Tok::LBracket);
    RuleList rl;
    if (accept(Tok::RBracket)) return rl;
    rl.rules.push_back(rule());
    while (accept(Tok::Comma)) rl.rules.push_back(rule());
    expect(Tok::RBracket);
    return rl;
  }

  ValueSet value_set() {
    expect(Tok::LBrace);
    ValueSet set;
    if (accept(Tok::RBrace)) return set;
    do {
      set.insert(value());
    } while (accept(Tok::Comma));
    expect(Tok::RBrace);
    return set;
  }

  Packet packet() {
    const Token& name = toks_[pos_++];
    Packet pk;
    if (std::from_chars(name.text.data() + 2, name.text.data() + name.text.size(), pk.uid).ec != std::errc{}) {
      throw ParseError(name.line, name.column, "packet id out of range");
    }
    expect(Tok::LBrace);
    std::vector<HeaderField> seen;
    bool payload_seen = false;
    do {
      if (at_word("payload")) {
        const Token& t = peek();
        if (payload_seen) throw ParseError(t.line, t.column, "duplicate payload");
        payload_seen = true;
        ++pos_;
        expect(Tok::Equals);
        pk.payload = hex_bytes(expect(Tok::String));
        continue;
      }
      const Token& t = peek();
      const HeaderField f = header_field();
      for (HeaderField s : seen) {
        if (s == f) throw ParseError(t.line, t.column, "duplicate header field " + std::string(field_name(f)));
      }
      seen.push_back(f);
      expect(Tok::Equals);
      pk.headers.set(f, header_value(f));
    } while (accept(Tok::Comma));
    if (seen.size() != kHeaderFields.size()) {
      throw ParseError(name.line, name.column, "packet literal must give all seven header fields");
    }
    expect(Tok::RBrace);
    return pk;
  }

  static std::vector<std::uint8_t> hex_bytes(const Token& t) {
    auto nibble = [&](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      throw ParseError(t.line, t.column, "payload must be hex");
    };
    if (t.text.size() % 2 != 0) throw ParseError(t.line, t.column, "payload must have an even number of hex digits");
    std::vector<std::uint8_t> out;
    for (std::size_t i = 0; i < t.text.size(); i += 2) {
      out.push_back(static_cast<std::uint8_t>(nibble(t.text[i]) * 16 + nibble(t.text[i + 1])));
    }
    return out;
  }

  Value value() {
    if (at(Tok::Number)) return Value::nat(number());
    if (at(Tok::Ip)) return Value(*IpAddr::parse(toks_[pos_++].text));
    if (accept(Tok::Underscore)) return Value(Wildcard{});
    if (at(Tok::Star)) return Value(pattern());
    if (at(Tok::LBracket)) return Value(rule_list());
    if (at(Tok::LBrace)) return Value(value_set());
    if (accept(Tok::LParen)) {
      std::vector<Value> items;
      items.push_back(value());
      expect(Tok::Comma);
      items.push_back(value());
      while (accept(Tok::Comma)) items.push_back(value());
      expect(Tok::RParen);
      return Value::tuple(std::move(items));
    }
    if (!at(Tok::Ident)) fail({"value"});

    const std::string& word = peek().text;
    if (word == "true" || word == "false") {
      ++pos_;
      return Value(word == "true");
    }
    if (word == "port") {
      ++pos_;
      expect(Tok::LParen);
      Port p = port_number();
      expect(Tok::RParen);
      return Value(p);
    }
    if (field_from_name(word)) return Value(pattern());
    if (word == "sendall" || word == "sendcontroller") return Value(action());
    if (word == "sendout") {
      if (peek(1).kind != Tok::LParen) {
        ++pos_;
        return Value(ActionCtor{ActionCtor::Kind::SendOut, std::nullopt});
      }
      return Value(action());
    }
    if (word == "change") {
      // change(field) is a constructor, change(field, v) a full action.
      if (peek(1).kind == Tok::LParen && peek(3).kind == Tok::RParen) {
        pos_ += 2;
        const HeaderField f = header_field();
        expect(Tok::RParen);
        return Value(ActionCtor{ActionCtor::Kind::Change, f});
      }
      return Value(action());
    }
    if (is_packet_name(word) && peek(1).kind == Tok::LBrace) return Value(packet());
    if (is_reserved_word(word)) fail({"value"});
    return Value(SwitchId{toks_[pos_++].text});
  }

  Binding binding() {
    if (accept(Tok::Lt)) {
      Event ev;
      if (accept(Tok::Gt)) return ev;
      ev.values.push_back(value());
      while (accept(Tok::Comma)) ev.values.push_back(value());
      expect(Tok::Gt);
      return ev;
    }
    if (at(Tok::LBracket)) return rule_list();
    if (accept(Tok::LBrace)) {
      InitialRuleAssignment ir;
      if (accept(Tok::RBrace)) return ir;
      do {
        expect(Tok::LParen);
        SwitchId sw{identifier("switch id")};
        expect(Tok::Comma);
        RuleList rl = rule_list();
        expect(Tok::RParen);
        ir.bindings.push_back(RuleBinding{std::move(sw), std::move(rl)});
      } while (accept(Tok::Comma));
      expect(Tok::RBrace);
      return ir;
    }
    fail({"'<'", "'['", "'{'"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

ast::Program parse_program(std::string_view source) { return Parser(source).program(); }
ast::Expr parse_expr(std::string_view source) { return Parser(source).whole_expr(); }
Value parse_value(std::string_view source) { return Parser(source).whole_value(); }
Binding parse_binding(std::string_view source) { return Parser(source).whole_binding(); }

}  // namespace imnet
