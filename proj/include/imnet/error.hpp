// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace imnet {

enum class ErrorKind {
  UntypeableValue,
  Heterogeneous,
  UnboundVariable,
  TypeMismatch,
  BuiltinLookup,
  Shape,
  LengthMismatch,
  PredicateType,
  ArityMismatch,
  AddRulesType,
  UnknownSwitch,
  UnknownPort,
  UnknownHost,
  SwitchNotInEvent,
  UnknownQuery,
  InvalidValue,
  Parse,
  Config,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with a 1-based source location and the set of tokens the
/// parser would have accepted at that point.
class ParseError : public Error {
 public:
  ParseError(int line, int column, std::vector<std::string> expected, const std::string& found);
  ParseError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

}  // namespace imnet
