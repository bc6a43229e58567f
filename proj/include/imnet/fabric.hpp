// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "imnet/ast.hpp"
#include "imnet/state.hpp"
#include "imnet/topology.hpp"
#include "imnet/value.hpp"

namespace imnet {

enum class MissBehavior { SendController, Drop };

struct FabricConfig {
  MissBehavior miss = MissBehavior::SendController;
  // SendAll reaches every other switch instead of link neighbours only.
  bool global_broadcast = false;
  std::size_t hop_budget = 64;
};

enum class DropReason {
  TableMiss,    // miss with MissBehavior::Drop
  UnlinkedPort, // sendout through a port with no link and no host
  UnknownPort,  // sendout through a port the switch does not have
  HopBudget,    // forwarding would exceed the hop budget
  Loop,         // this packet already took the same table entry at that switch
  NoOutput,     // actions ran but emitted nothing (e.g. only change, or a flood with no neighbours)
};

std::string_view drop_reason_name(DropReason r);

struct Forwarded {
  Endpoint to;
  bool operator==(const Forwarded&) const = default;
};
struct DeliveredToHost {
  IpAddr host;
  Endpoint at;
  bool operator==(const DeliveredToHost&) const = default;
};
struct ToController {
  bool operator==(const ToController&) const = default;
};
struct Dropped {
  DropReason reason;
  bool operator==(const Dropped&) const = default;
};

using Disposition = std::variant<Forwarded, DeliveredToHost, ToController, Dropped>;

/// One packet taken off the pending queue and run through its switch's table.
struct ProcessingRecord {
  SwitchId at;
  Packet packet;  // as it arrived
  std::size_t hops = 0;
  std::optional<std::size_t> matched_rule;
  std::vector<Action> actions;
  std::vector<Disposition> dispositions;
};

struct HistoryEntry {
  Packet packet;
  Action action;
  bool operator==(const HistoryEntry&) const = default;
};

class FabricView;

/// Simulated switches: live flow tables, the pending packet queue, the
/// controller inbox and the per-switch action history.
class Fabric {
 public:
  explicit Fabric(Topology topology, FabricConfig config = {});

  const Topology& topology() const { return topology_; }
  const FabricConfig& config() const { return config_; }
  const std::map<SwitchId, RuleList>& tables() const { return tables_; }
  const RuleList& table(const SwitchId& id) const;
  const std::vector<HistoryEntry>& history(const SwitchId& id) const;
  const std::map<SwitchId, std::vector<HistoryEntry>>& histories() const { return history_; }
  const std::vector<std::pair<SwitchId, Packet>>& controller_inbox() const { return inbox_; }
  std::size_t pending_count() const { return pending_.size(); }

  /// Queues pk at a switch and assigns it a fresh uid, which is returned.
  /// Throws UnknownSwitch, or UnknownPort when pk's inport is not a port of `at`.
  std::uint64_t inject_packet(const SwitchId& at, Packet pk);

  /// Drains the pending queue in FIFO order, including packets forwarded
  /// while draining. A table miss goes to the controller (or is dropped,
  /// per config). Per-packet failures become records, never exceptions.
  std::vector<ProcessingRecord> process_pending();

  /// Executes one action on pk at switch `at` and logs it to history(at).
  /// Change rewrites pk in place. Throws UnknownSwitch, or UnknownPort for
  /// a sendout through a port `at` does not have.
  std::vector<Disposition> apply_action(const Action& action, Packet& pk, const SwitchId& at);

  /// Makes the live tables mirror sigma; switches absent from sigma get
  /// empty tables. Throws UnknownSwitch.
  void sync_tables(const SwitchState& sigma);

  FabricView view() const;

 private:
  struct Pending {
    SwitchId at;
    Packet packet;
    std::size_t hops;
    std::uint64_t lineage;
  };

  // Table entry a packet takes at a switch; nullopt is the miss entry.
  using EntryKey = std::tuple<std::uint64_t, SwitchId, std::optional<std::size_t>>;

  void require_switch(const SwitchId& id) const;
  void apply(const Action& action, Packet& pk, const SwitchId& at, std::size_t hops, std::uint64_t lineage,
             std::vector<Disposition>& out);
  void forward(const Packet& pk, const Endpoint& to, std::size_t hops, std::uint64_t lineage,
               std::vector<Disposition>& out);

  Topology topology_;
  FabricConfig config_;
  std::map<SwitchId, RuleList> tables_;
  std::map<SwitchId, std::vector<HistoryEntry>> history_;
  std::vector<std::pair<SwitchId, Packet>> inbox_;
  std::deque<Pending> pending_;
  std::set<EntryKey> taken_;
  std::uint64_t next_uid_ = 1;
  std::uint64_t next_lineage_ = 1;
};

/// Read-only access to a fabric for queries and builtin functions.
class FabricView {
 public:
  explicit FabricView(const Fabric& fabric) : fabric_(&fabric) {}

  /// SwitchIds: sorted switch ids. SourceIps: (srcip, packet) pairs from the
  /// controller inbox in arrival order. ArrivedPackets: inbox packets.
  Event query(QueryName q) const;

  /// Attachment port of the host a value refers to (an IP, a packet's
  /// source IP, or the first such component of a tuple). Throws UnknownHost.
  Port port_of(const Value& v) const;

  /// Attachment switch of the host `v` refers to, provided it occurs in z.
  /// Throws UnknownHost or SwitchNotInEvent.
  SwitchId switch_of(const Value& v, const Event& z) const;

  const Fabric& fabric() const { return *fabric_; }

 private:
  Endpoint host_endpoint(const Value& v, std::string_view builtin) const;

  const Fabric* fabric_;
};

}  // namespace imnet
