// SPDX-License-Identifier: Apache-2.0
#include "imnet/value.hpp"

#include <algorithm>
#include <charconv>

#include "imnet/error.hpp"
#include "imnet/format.hpp"

namespace imnet {

std::optional<IpAddr> IpAddr::parse(std::string_view dotted) {
  std::uint32_t bits = 0;
  const char* p = dotted.data();
  const char* end = dotted.data() + dotted.size();
  for (int octet = 0; octet < 4; ++octet) {
    if (octet > 0) {
      if (p == end || *p != '.') return std::nullopt;
      ++p;
    }
    unsigned value = 0;
    auto [next, ec] = std::from_chars(p, end, value);
    if (ec != std::errc{} || next == p || value > 255 || next - p > 3) return std::nullopt;
    bits = (bits << 8) | value;
    p = next;
  }
  if (p != end) return std::nullopt;
  return IpAddr{bits};
}

std::string IpAddr::to_string() const {
  return std::to_string((bits >> 24) & 0xff) + "." + std::to_string((bits >> 16) & 0xff) + "." +
         std::to_string((bits >> 8) & 0xff) + "." + std::to_string(bits & 0xff);
}

std::string_view field_name(HeaderField field) {
  switch (field) {
    case HeaderField::SrcIp: return "srcip";
    case HeaderField::DstIp: return "dstip";
    case HeaderField::SrcPort: return "srcport";
    case HeaderField::DstPort: return "dstport";
    case HeaderField::InPort: return "inport";
    case HeaderField::EthSrc: return "ethsrc";
    case HeaderField::EthDst: return "ethdst";
  }
  return "?";
}

std::optional<HeaderField> field_from_name(std::string_view name) {
  for (HeaderField f : kHeaderFields) {
    if (field_name(f) == name) return f;
  }
  return std::nullopt;
}

bool field_holds_ip(HeaderField field) {
  return field == HeaderField::SrcIp || field == HeaderField::DstIp;
}

bool header_value_fits(HeaderField field, const HeaderValue& value) {
  return field_holds_ip(field) == std::holds_alternative<IpAddr>(value);
}

HeaderValue PacketHeaders::get(HeaderField field) const {
  switch (field) {
    case HeaderField::SrcIp: return srcip;
    case HeaderField::DstIp: return dstip;
    case HeaderField::SrcPort: return srcport;
    case HeaderField::DstPort: return dstport;
    case HeaderField::InPort: return inport;
    case HeaderField::EthSrc: return ethsrc;
    case HeaderField::EthDst: return ethdst;
  }
  return std::uint64_t{0};
}

void PacketHeaders::set(HeaderField field, const HeaderValue& value) {
  if (!header_value_fits(field, value)) {
    throw Error(ErrorKind::TypeMismatch,
                "value " + imnet::to_string(value) + " does not fit header field " + std::string(field_name(field)));
  }
  switch (field) {
    case HeaderField::SrcIp: srcip = std::get<IpAddr>(value); break;
    case HeaderField::DstIp: dstip = std::get<IpAddr>(value); break;
    case HeaderField::SrcPort: srcport = std::get<std::uint64_t>(value); break;
    case HeaderField::DstPort: dstport = std::get<std::uint64_t>(value); break;
    case HeaderField::InPort: inport = std::get<std::uint64_t>(value); break;
    case HeaderField::EthSrc: ethsrc = std::get<std::uint64_t>(value); break;
    case HeaderField::EthDst: ethdst = std::get<std::uint64_t>(value); break;
  }
}

Pattern Pattern::exact(const PacketHeaders& headers) {
  Pattern p;
  for (HeaderField f : kHeaderFields) p.constraints_.emplace(f, headers.get(f));
  return p;
}

Pattern& Pattern::constrain(HeaderField field, HeaderValue value) {
  if (!header_value_fits(field, value)) {
    throw Error(ErrorKind::TypeMismatch,
                "pattern value " + imnet::to_string(value) + " does not fit field " + std::string(field_name(field)));
  }
  if (!constraints_.emplace(field, std::move(value)).second) {
    throw Error(ErrorKind::InvalidValue, "duplicate pattern constraint on " + std::string(field_name(field)));
  }
  return *this;
}

Pattern Pattern::without(HeaderField field) const {
  Pattern p = *this;
  p.constraints_.erase(field);
  return p;
}

Rule::Rule(Pattern pattern, std::vector<Action> actions)
    : pattern_(std::move(pattern)), actions_(std::move(actions)) {
  if (actions_.empty()) throw Error(ErrorKind::InvalidValue, "rule needs at least one action");
}

bool ValueSet::contains(const Value& v) const {
  return std::find(items.begin(), items.end(), v) != items.end();
}

bool ValueSet::insert(Value v) {
  if (contains(v)) return false;
  items.push_back(std::move(v));
  return true;
}

bool ValueSet::subset_of(const ValueSet& other) const {
  return std::all_of(items.begin(), items.end(), [&](const Value& v) { return other.contains(v); });
}

bool operator==(const Tuple& a, const Tuple& b) { return a.items == b.items; }

bool operator==(const ValueSet& a, const ValueSet& b) {
  return a.items.size() == b.items.size() && a.subset_of(b);
}

}  // namespace imnet
