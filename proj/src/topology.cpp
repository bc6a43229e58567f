// SPDX-License-Identifier: Apache-2.0
#include "imnet/topology.hpp"

#include <cctype>

#include "imnet/ast.hpp"
#include "imnet/error.hpp"

namespace imnet {

namespace {

std::string describe(const Endpoint& e) { return e.sw.name + ":" + std::to_string(e.port.number); }

bool identifier_shaped(const std::string& name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return name != "_";
}

}  // namespace

void Topology::add_switch(const SwitchId& id, const std::set<Port>& ports) {
  if (!identifier_shaped(id.name) || is_reserved_word(id.name)) {
    throw Error(ErrorKind::Config, "switch id '" + id.name + "' must be a non-reserved identifier");
  }
  if (!ports_.emplace(id, ports).second) throw Error(ErrorKind::Config, "duplicate switch '" + id.name + "'");
}

bool Topology::has_port(const SwitchId& id, Port port) const {
  auto it = ports_.find(id);
  return it != ports_.end() && it->second.count(port) != 0;
}

const std::set<Port>& Topology::ports(const SwitchId& id) const {
  auto it = ports_.find(id);
  if (it == ports_.end()) throw Error(ErrorKind::UnknownSwitch, "unknown switch '" + id.name + "'");
  return it->second;
}

void Topology::require_free(const Endpoint& e) const {
  if (!has_switch(e.sw)) throw Error(ErrorKind::Config, "unknown switch '" + e.sw.name + "'");
  if (!has_port(e.sw, e.port)) throw Error(ErrorKind::Config, "switch has no port " + describe(e));
  if (peers_.count(e) || host_ports_.count(e)) throw Error(ErrorKind::Config, "port already attached " + describe(e));
}

void Topology::add_link(const Endpoint& a, const Endpoint& b) {
  if (a == b) throw Error(ErrorKind::Config, "link endpoints must differ: " + describe(a));
  require_free(a);
  require_free(b);
  peers_.emplace(a, b);
  peers_.emplace(b, a);
}

void Topology::add_host(IpAddr ip, const Endpoint& at) {
  require_free(at);
  if (hosts_.count(ip)) throw Error(ErrorKind::Config, "duplicate host " + ip.to_string());
  hosts_.emplace(ip, at);
  host_ports_.emplace(at, ip);
}

std::optional<Endpoint> Topology::peer(const Endpoint& e) const {
  auto it = peers_.find(e);
  if (it == peers_.end()) return std::nullopt;
  return it->second;
}

std::optional<IpAddr> Topology::host_at(const Endpoint& e) const {
  auto it = host_ports_.find(e);
  if (it == host_ports_.end()) return std::nullopt;
  return it->second;
}

std::optional<Endpoint> Topology::host_location(IpAddr ip) const {
  auto it = hosts_.find(ip);
  if (it == hosts_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<Endpoint, Endpoint>> Topology::links() const {
  std::vector<std::pair<Endpoint, Endpoint>> out;
  for (const auto& [a, b] : peers_) {
    if (a < b) out.emplace_back(a, b);
  }
  return out;
}

}  // namespace imnet
