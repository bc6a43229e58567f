// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

namespace imnet {

struct Nat {
  std::uint64_t value = 0;
  auto operator<=>(const Nat&) const = default;
};

struct IpAddr {
  std::uint32_t bits = 0;

  static std::optional<IpAddr> parse(std::string_view dotted);
  std::string to_string() const;

  auto operator<=>(const IpAddr&) const = default;
};

/// Opaque switch identifier. Names are identifier-shaped so they can be
/// written back as bare words in the literal syntax.
struct SwitchId {
  std::string name;
  auto operator<=>(const SwitchId&) const = default;
};

struct Port {
  std::uint32_t number = 0;
  auto operator<=>(const Port&) const = default;
};

enum class HeaderField : std::uint8_t { SrcIp, DstIp, SrcPort, DstPort, InPort, EthSrc, EthDst };

inline constexpr std::array<HeaderField, 7> kHeaderFields = {
    HeaderField::SrcIp,  HeaderField::DstIp,  HeaderField::SrcPort, HeaderField::DstPort,
    HeaderField::InPort, HeaderField::EthSrc, HeaderField::EthDst};

std::string_view field_name(HeaderField field);
std::optional<HeaderField> field_from_name(std::string_view name);
bool field_holds_ip(HeaderField field);

/// A header field value: IPv4 address for srcip/dstip, natural number otherwise.
using HeaderValue = std::variant<std::uint64_t, IpAddr>;

bool header_value_fits(HeaderField field, const HeaderValue& value);

struct PacketHeaders {
  IpAddr srcip;
  IpAddr dstip;
  std::uint64_t srcport = 0;
  std::uint64_t dstport = 0;
  std::uint64_t inport = 0;
  std::uint64_t ethsrc = 0;
  std::uint64_t ethdst = 0;

  HeaderValue get(HeaderField field) const;
  // Throws TypeMismatch when the value kind does not fit the field.
  void set(HeaderField field, const HeaderValue& value);

  bool operator==(const PacketHeaders&) const = default;
};

struct Packet {
  PacketHeaders headers;
  std::vector<std::uint8_t> payload;
  std::uint64_t uid = 0;

  bool operator==(const Packet&) const = default;
};

/// Conjunction of exact header constraints; no constraints matches everything.
class Pattern {
 public:
  Pattern() = default;

  static Pattern exact(const PacketHeaders& headers);

  // Throws InvalidValue on a second constraint for the same field and
  // TypeMismatch when the value does not fit the field.
  Pattern& constrain(HeaderField field, HeaderValue value);
  Pattern without(HeaderField field) const;

  const std::map<HeaderField, HeaderValue>& constraints() const { return constraints_; }
  bool match_all() const { return constraints_.empty(); }

  bool operator==(const Pattern&) const = default;

 private:
  std::map<HeaderField, HeaderValue> constraints_;
};

struct SendController {
  bool operator==(const SendController&) const = default;
};
struct SendAll {
  bool operator==(const SendAll&) const = default;
};
struct SendOut {
  Port port;
  bool operator==(const SendOut&) const = default;
};
struct Change {
  HeaderField field;
  HeaderValue value;
  bool operator==(const Change&) const = default;
};

using Action = std::variant<SendController, SendAll, SendOut, Change>;

/// An action waiting for its argument, as stored in rule-construction
/// triples: bare `sendout`, or `change(field)`.
struct ActionCtor {
  enum class Kind { SendOut, Change };
  Kind kind = Kind::SendOut;
  std::optional<HeaderField> field;

  bool operator==(const ActionCtor&) const = default;
};

class Rule {
 public:
  // Throws InvalidValue when actions is empty.
  Rule(Pattern pattern, std::vector<Action> actions);

  const Pattern& pattern() const { return pattern_; }
  const std::vector<Action>& actions() const { return actions_; }

  bool operator==(const Rule&) const = default;

 private:
  Pattern pattern_;
  std::vector<Action> actions_;
};

/// Ordered rules; earlier entries take priority at match time.
struct RuleList {
  std::vector<Rule> rules;

  std::size_t size() const { return rules.size(); }
  bool empty() const { return rules.empty(); }
  bool operator==(const RuleList&) const = default;
};

struct Wildcard {
  bool operator==(const Wildcard&) const = default;
};

class Value;

struct Tuple {
  std::vector<Value> items;
};

/// Deduplicated set of values; iteration follows insertion order, equality
/// ignores order.
struct ValueSet {
  std::vector<Value> items;

  bool contains(const Value& v) const;
  bool insert(Value v);
  bool subset_of(const ValueSet& other) const;
};

bool operator==(const Tuple& a, const Tuple& b);
bool operator==(const ValueSet& a, const ValueSet& b);

class Value {
 public:
  using Storage = std::variant<Nat, bool, SwitchId, Port, IpAddr, Packet, Pattern, Action,
                               ActionCtor, RuleList, Tuple, ValueSet, Wildcard>;

  template <class T>
    requires std::is_constructible_v<Storage, T&&> &&
             (!std::is_same_v<std::remove_cvref_t<T>, Value>)
  Value(T&& v) : storage_(std::forward<T>(v)) {}

  static Value nat(std::uint64_t n) { return Value(Nat{n}); }
  static Value tuple(std::vector<Value> items) { return Value(Tuple{std::move(items)}); }

  const Storage& storage() const { return storage_; }

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(storage_);
  }
  template <class T>
  const T& as() const {
    return std::get<T>(storage_);
  }
  template <class T>
  const T* get_if() const {
    return std::get_if<T>(&storage_);
  }

  friend bool operator==(const Value& a, const Value& b) { return a.storage_ == b.storage_; }

 private:
  Storage storage_;
};

/// Finite ordered sequence of values; homogeneity is checked by
/// event_typecheck rather than enforced at construction.
struct Event {
  std::vector<Value> values;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }
  bool operator==(const Event&) const = default;
};

}  // namespace imnet
