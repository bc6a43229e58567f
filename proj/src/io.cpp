// SPDX-License-Identifier: Apache-2.0
#include "imnet/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "imnet/error.hpp"
#include "imnet/parser.hpp"

namespace imnet {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Config, what); }

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string(what) + ": " + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) bad(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string as_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": expected a string");
  return j.get<std::string>();
}

std::uint64_t as_uint(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) bad(where + ": expected a non-negative integer");
  return j.get<std::uint64_t>();
}

Port as_port(const json& j, const std::string& where) {
  std::uint64_t n = as_uint(j, where);
  if (n > UINT32_MAX) bad(where + ": port out of range");
  return Port{static_cast<std::uint32_t>(n)};
}

IpAddr as_ip(const json& j, const std::string& where) {
  auto ip = IpAddr::parse(as_string(j, where));
  if (!ip) bad(where + ": invalid IPv4 address");
  return *ip;
}

Endpoint as_endpoint(const json& j, const std::string& where) {
  return Endpoint{SwitchId{as_string(field(j, "switch", where), where + ".switch")},
                  as_port(field(j, "port", where), where + ".port")};
}

std::vector<std::uint8_t> hex_payload(const std::string& hex, const std::string& where) {
  if (hex.size() % 2 != 0) bad(where + ": payload needs an even number of hex digits");
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    std::uint8_t byte = 0;
    for (std::size_t k = i; k < i + 2; ++k) {
      const char c = hex[k];
      int d = -1;
      if (c >= '0' && c <= '9') d = c - '0';
      else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
      if (d < 0) bad(where + ": payload must be hex");
      byte = static_cast<std::uint8_t>(byte * 16 + d);
    }
    out.push_back(byte);
  }
  return out;
}

}  // namespace

MissBehavior parse_miss_behavior(const std::string& name) {
  if (name == "controller") return MissBehavior::SendController;
  if (name == "drop") return MissBehavior::Drop;
  bad("default action must be \"controller\" or \"drop\", got \"" + name + "\"");
}

TopologyFile parse_topology(const std::string& json_text) {
  const json doc = parse_json(json_text, "topology");
  TopologyFile out;
  try {
    for (const json& sw : field(doc, "switches", "topology")) {
      const std::string id = as_string(field(sw, "id", "switch"), "switch.id");
      std::set<Port> ports;
      for (const json& p : field(sw, "ports", "switch " + id)) ports.insert(as_port(p, "switch " + id + " port"));
      out.topology.add_switch(SwitchId{id}, ports);
    }
    if (doc.contains("links")) {
      for (const json& l : doc.at("links")) out.topology.add_link(as_endpoint(field(l, "a", "link"), "link.a"),
                                                                  as_endpoint(field(l, "b", "link"), "link.b"));
    }
    if (doc.contains("hosts")) {
      for (const json& h : doc.at("hosts")) {
        out.topology.add_host(as_ip(field(h, "ip", "host"), "host.ip"), as_endpoint(h, "host"));
      }
    }
    if (doc.contains("default_action")) {
      out.default_action = parse_miss_behavior(as_string(doc.at("default_action"), "default_action"));
    }
  } catch (const json::exception& e) {
    bad(std::string("topology: ") + e.what());
  }
  return out;
}

std::vector<Injection> parse_injections(const std::string& json_text) {
  const json doc = parse_json(json_text, "injections");
  if (!doc.is_array()) bad("injections: expected an array");
  std::vector<Injection> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = "injection " + std::to_string(i);
    const json& j = doc[i];
    Injection inj;
    inj.at = SwitchId{as_string(field(j, "switch", where), where + ".switch")};
    if (j.contains("phase")) {
      const std::string phase = as_string(j.at("phase"), where + ".phase");
      if (phase == "before") inj.phase = InjectPhase::Before;
      else if (phase == "after") inj.phase = InjectPhase::After;
      else bad(where + ": phase must be \"before\" or \"after\"");
    }
    const json& headers = field(j, "headers", where);
    if (!headers.is_object()) bad(where + ".headers: expected an object");
    for (const auto& [name, value] : headers.items()) {
      auto f = field_from_name(name);
      if (!f) bad(where + ": unknown header field \"" + name + "\"");
      const std::string fw = where + "." + name;
      if (field_holds_ip(*f)) inj.packet.headers.set(*f, as_ip(value, fw));
      else inj.packet.headers.set(*f, as_uint(value, fw));
    }
    if (!headers.contains("inport")) bad(where + ": headers need an inport");
    if (j.contains("payload")) inj.packet.payload = hex_payload(as_string(j.at("payload"), where), where);
    out.push_back(std::move(inj));
  }
  return out;
}

VariableState parse_bindings(const std::string& json_text) {
  const json doc = parse_json(json_text, "bindings");
  if (!doc.is_object()) bad("bindings: expected an object");
  VariableState gamma;
  for (const auto& [name, literal] : doc.items()) {
    const std::string text = as_string(literal, "binding " + name);
    try {
      gamma.emplace(name, parse_binding(text));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Config) throw;
      bad("binding " + name + ": " + e.what());
    }
  }
  return gamma;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TopologyFile load_topology(const std::string& path) { return parse_topology(read_file(path)); }
std::vector<Injection> load_injections(const std::string& path) { return parse_injections(read_file(path)); }
VariableState load_bindings(const std::string& path) { return parse_bindings(read_file(path)); }

}  // namespace imnet
