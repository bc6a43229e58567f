// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "imnet/executor.hpp"
#include "imnet/fabric.hpp"

// Trace files are JSON Lines: one record per line, each with a "kind" of
// "state", "packet" or "error". Values inside records use the canonical
// literal syntax of format.hpp.

namespace imnet {

std::string state_record(std::size_t step, const Snapshot& snap);
std::string packet_record(const std::string& phase, std::size_t seq, const ProcessingRecord& rec);
std::string error_record(const std::string& label, const Error& e);

std::string disposition_text(const Disposition& d);

struct TraceDiff {
  std::size_t index;               // first record that differs
  std::optional<std::string> actual;  // nullopt when that trace ended early
  std::optional<std::string> golden;
};

/// Structural comparison of two JSONL traces (key order and whitespace are
/// ignored). Throws Error(Config) when either text is not valid JSONL.
std::optional<TraceDiff> diff_traces(const std::string& actual, const std::string& golden);

}  // namespace imnet
