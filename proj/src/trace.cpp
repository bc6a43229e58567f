// SPDX-License-Identifier: Apache-2.0
#include "imnet/trace.hpp"

#include <sstream>

#include <json.hpp>

#include "imnet/format.hpp"

namespace imnet {

namespace {

using ojson = nlohmann::ordered_json;

std::string endpoint_text(const Endpoint& e) { return e.sw.name + ":" + std::to_string(e.port.number); }

std::vector<nlohmann::json> read_records(const std::string& text, const char* which) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::Config, std::string(which) + " line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace

std::string state_record(std::size_t step, const Snapshot& snap) {
  ojson sigma = ojson::object();
  for (const auto& [id, rules] : snap.state.sigma) sigma[id.name] = to_string(rules);
  ojson gamma = ojson::object();
  for (const auto& [name, b] : snap.state.gamma) gamma[name] = to_string(b);
  ojson ir = ojson::array();
  for (const RuleBinding& b : snap.state.ir.bindings) ir.push_back(to_string(b));
  ojson rec;
  rec["kind"] = "state";
  rec["step"] = step;
  rec["label"] = snap.label;
  rec["sigma"] = std::move(sigma);
  rec["gamma"] = std::move(gamma);
  rec["ir"] = std::move(ir);
  return rec.dump();
}

std::string disposition_text(const Disposition& d) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Forwarded>) return "forwarded " + endpoint_text(x.to);
        else if constexpr (std::is_same_v<T, DeliveredToHost>) return "host " + x.host.to_string() + " at " + endpoint_text(x.at);
        else if constexpr (std::is_same_v<T, ToController>) return "controller";
        else return "dropped " + std::string(drop_reason_name(x.reason));
      },
      d);
}

std::string packet_record(const std::string& phase, std::size_t seq, const ProcessingRecord& rec) {
  ojson actions = ojson::array();
  for (const Action& a : rec.actions) actions.push_back(to_string(a));
  ojson dispositions = ojson::array();
  for (const Disposition& d : rec.dispositions) dispositions.push_back(disposition_text(d));
  ojson out;
  out["kind"] = "packet";
  out["phase"] = phase;
  out["seq"] = seq;
  out["switch"] = rec.at.name;
  out["packet"] = to_string(rec.packet);
  out["hops"] = rec.hops;
  out["rule"] = rec.matched_rule ? ojson(*rec.matched_rule) : ojson(nullptr);
  out["actions"] = std::move(actions);
  out["dispositions"] = std::move(dispositions);
  return out.dump();
}

std::string error_record(const std::string& label, const Error& e) {
  ojson out;
  out["kind"] = "error";
  out["error"] = std::string(error_kind_name(e.kind()));
  out["label"] = label;
  out["message"] = e.what();
  return out.dump();
}

std::optional<TraceDiff> diff_traces(const std::string& actual, const std::string& golden) {
  const auto a = read_records(actual, "actual");
  const auto g = read_records(golden, "golden");
  const std::size_t n = std::max(a.size(), g.size());
  for (std::size_t i = 0; i < n; ++i) {
    const bool have_a = i < a.size();
    const bool have_g = i < g.size();
    if (have_a && have_g && a[i] == g[i]) continue;
    return TraceDiff{i, have_a ? std::optional(a[i].dump()) : std::nullopt,
                     have_g ? std::optional(g[i].dump()) : std::nullopt};
  }
  return std::nullopt;
}

}  // namespace imnet
