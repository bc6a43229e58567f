// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "imnet/value.hpp"

namespace imnet {

struct Endpoint {
  SwitchId sw;
  Port port;

  auto operator<=>(const Endpoint&) const = default;
};

/// Switches with their ports, undirected switch-to-switch links, and host
/// attachment points. Each (switch, port) carries at most one link or host.
class Topology {
 public:
  // Each of these throws Config on a violated invariant.
  void add_switch(const SwitchId& id, const std::set<Port>& ports);
  void add_link(const Endpoint& a, const Endpoint& b);
  void add_host(IpAddr ip, const Endpoint& at);

  bool has_switch(const SwitchId& id) const { return ports_.count(id) != 0; }
  bool has_port(const SwitchId& id, Port port) const;

  const std::map<SwitchId, std::set<Port>>& switches() const { return ports_; }
  const std::set<Port>& ports(const SwitchId& id) const;

  std::optional<Endpoint> peer(const Endpoint& e) const;
  std::optional<IpAddr> host_at(const Endpoint& e) const;
  std::optional<Endpoint> host_location(IpAddr ip) const;

  /// Each link once, as (lower endpoint, higher endpoint).
  std::vector<std::pair<Endpoint, Endpoint>> links() const;
  const std::map<IpAddr, Endpoint>& hosts() const { return hosts_; }

 private:
  void require_free(const Endpoint& e) const;

  std::map<SwitchId, std::set<Port>> ports_;
  std::map<Endpoint, Endpoint> peers_;
  std::map<IpAddr, Endpoint> hosts_;
  std::map<Endpoint, IpAddr> host_ports_;
};

}  // namespace imnet
