// SPDX-License-Identifier: Apache-2.0
#include "imnet/fabric.hpp"

#include "imnet/error.hpp"
#include "imnet/format.hpp"
#include "imnet/match.hpp"

namespace imnet {

std::string_view drop_reason_name(DropReason r) {
  switch (r) {
    case DropReason::TableMiss: return "table-miss";
    case DropReason::UnlinkedPort: return "unlinked-port";
    case DropReason::UnknownPort: return "unknown-port";
    case DropReason::HopBudget: return "hop-budget";
    case DropReason::Loop: return "loop";
    case DropReason::NoOutput: return "no-output";
  }
  return "?";
}

Fabric::Fabric(Topology topology, FabricConfig config) : topology_(std::move(topology)), config_(config) {
  for (const auto& [id, ports] : topology_.switches()) {
    tables_.emplace(id, RuleList{});
    history_.emplace(id, std::vector<HistoryEntry>{});
  }
}

void Fabric::require_switch(const SwitchId& id) const {
  if (!topology_.has_switch(id)) throw Error(ErrorKind::UnknownSwitch, "unknown switch '" + id.name + "'");
}

const RuleList& Fabric::table(const SwitchId& id) const {
  require_switch(id);
  return tables_.at(id);
}

const std::vector<HistoryEntry>& Fabric::history(const SwitchId& id) const {
  require_switch(id);
  return history_.at(id);
}

std::uint64_t Fabric::inject_packet(const SwitchId& at, Packet pk) {
  require_switch(at);
  if (pk.headers.inport > UINT32_MAX ||
      !topology_.has_port(at, Port{static_cast<std::uint32_t>(pk.headers.inport)})) {
    throw Error(ErrorKind::UnknownPort,
                "switch '" + at.name + "' has no port " + std::to_string(pk.headers.inport));
  }
  pk.uid = next_uid_++;
  pending_.push_back(Pending{at, std::move(pk), 0, next_lineage_++});
  return pending_.back().packet.uid;
}

void Fabric::forward(const Packet& pk, const Endpoint& to, std::size_t hops, std::uint64_t lineage,
                     std::vector<Disposition>& out) {
  if (hops + 1 > config_.hop_budget) {
    out.push_back(Dropped{DropReason::HopBudget});
    return;
  }
  Packet copy = pk;
  copy.headers.inport = to.port.number;
  pending_.push_back(Pending{to.sw, std::move(copy), hops + 1, lineage});
  out.push_back(Forwarded{to});
}

void Fabric::apply(const Action& action, Packet& pk, const SwitchId& at, std::size_t hops, std::uint64_t lineage,
                   std::vector<Disposition>& out) {
  if (const auto* so = std::get_if<SendOut>(&action)) {
    if (!topology_.has_port(at, so->port)) {
      throw Error(ErrorKind::UnknownPort,
                  "switch '" + at.name + "' has no port " + std::to_string(so->port.number));
    }
  }
  history_[at].push_back(HistoryEntry{pk, action});

  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, SendController>) {
          inbox_.emplace_back(at, pk);
          out.push_back(ToController{});
        } else if constexpr (std::is_same_v<T, SendAll>) {
          if (config_.global_broadcast) {
            for (const auto& [id, ports] : topology_.switches()) {
              if (id != at) forward(pk, Endpoint{id, Port{0}}, hops, lineage, out);
            }
            return;
          }
          for (Port p : topology_.ports(at)) {
            if (p.number == pk.headers.inport) continue;
            if (auto peer = topology_.peer(Endpoint{at, p})) forward(pk, *peer, hops, lineage, out);
          }
        } else if constexpr (std::is_same_v<T, SendOut>) {
          const Endpoint here{at, a.port};
          if (auto peer = topology_.peer(here)) {
            forward(pk, *peer, hops, lineage, out);
          } else if (auto host = topology_.host_at(here)) {
            out.push_back(DeliveredToHost{*host, here});
          } else {
            out.push_back(Dropped{DropReason::UnlinkedPort});
          }
        } else {
          pk.headers.set(a.field, a.value);
        }
      },
      action);
}

std::vector<Disposition> Fabric::apply_action(const Action& action, Packet& pk, const SwitchId& at) {
  require_switch(at);
  std::vector<Disposition> out;
  apply(action, pk, at, 0, next_lineage_++, out);
  return out;
}

std::vector<ProcessingRecord> Fabric::process_pending() {
  std::vector<ProcessingRecord> records;
  while (!pending_.empty()) {
    Pending item = std::move(pending_.front());
    pending_.pop_front();

    ProcessingRecord rec{item.at, item.packet, item.hops, std::nullopt, {}, {}};
    rec.matched_rule = rule_lookup(tables_.at(item.at), item.packet);

    if (!taken_.emplace(item.lineage, item.at, rec.matched_rule).second) {
      rec.dispositions.push_back(Dropped{DropReason::Loop});
      records.push_back(std::move(rec));
      continue;
    }

    if (rec.matched_rule) {
      rec.actions = tables_.at(item.at).rules[*rec.matched_rule].actions();
    } else if (config_.miss == MissBehavior::SendController) {
      rec.actions = {SendController{}};
    } else {
      rec.dispositions.push_back(Dropped{DropReason::TableMiss});
    }

    Packet work = item.packet;
    for (const Action& a : rec.actions) {
      try {
        apply(a, work, item.at, item.hops, item.lineage, rec.dispositions);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnknownPort) throw;
        rec.dispositions.push_back(Dropped{DropReason::UnknownPort});
      }
    }
    if (rec.dispositions.empty()) rec.dispositions.push_back(Dropped{DropReason::NoOutput});
    records.push_back(std::move(rec));
  }
  return records;
}

void Fabric::sync_tables(const SwitchState& sigma) {
  for (const auto& [id, rules] : sigma) require_switch(id);
  for (auto& [id, table] : tables_) {
    auto it = sigma.find(id);
    table = it == sigma.end() ? RuleList{} : it->second;
  }
}

FabricView Fabric::view() const { return FabricView(*this); }

Event FabricView::query(QueryName q) const {
  Event ev;
  switch (q) {
    case QueryName::SwitchIds:
      for (const auto& [id, ports] : fabric_->topology().switches()) ev.values.emplace_back(id);
      break;
    case QueryName::SourceIps:
      for (const auto& [sw, pk] : fabric_->controller_inbox()) {
        ev.values.push_back(Value::tuple({Value(pk.headers.srcip), Value(pk)}));
      }
      break;
    case QueryName::ArrivedPackets:
      for (const auto& [sw, pk] : fabric_->controller_inbox()) ev.values.emplace_back(pk);
      break;
  }
  return ev;
}

Endpoint FabricView::host_endpoint(const Value& v, std::string_view builtin) const {
  std::optional<IpAddr> ip;
  auto host_ref = [](const Value& x) -> std::optional<IpAddr> {
    if (const auto* a = x.get_if<IpAddr>()) return *a;
    if (const auto* p = x.get_if<Packet>()) return p->headers.srcip;
    return std::nullopt;
  };
  ip = host_ref(v);
  if (!ip) {
    if (const auto* t = v.get_if<Tuple>()) {
      for (const Value& item : t->items) {
        if ((ip = host_ref(item))) break;
      }
    }
  }
  if (!ip) {
    throw Error(ErrorKind::TypeMismatch,
                std::string(builtin) + ": value " + to_string(v) + " carries no IP address or packet");
  }
  auto at = fabric_->topology().host_location(*ip);
  if (!at) throw Error(ErrorKind::UnknownHost, std::string(builtin) + ": unknown host " + ip->to_string());
  return *at;
}

Port FabricView::port_of(const Value& v) const { return host_endpoint(v, "port").port; }

SwitchId FabricView::switch_of(const Value& v, const Event& z) const {
  const Endpoint at = host_endpoint(v, "switch");
  for (const Value& candidate : z.values) {
    if (const auto* id = candidate.get_if<SwitchId>(); id && *id == at.sw) return at.sw;
  }
  throw Error(ErrorKind::SwitchNotInEvent,
              "switch: host switch '" + at.sw.name + "' does not occur in " + to_string(z));
}

}  // namespace imnet
