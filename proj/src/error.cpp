// SPDX-License-Identifier: Apache-2.0
#include "imnet/error.hpp"

#include <sstream>

namespace imnet {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UntypeableValue: return "untypeable-value";
    case ErrorKind::Heterogeneous: return "heterogeneity-error";
    case ErrorKind::UnboundVariable: return "unbound-variable";
    case ErrorKind::TypeMismatch: return "type-mismatch";
    case ErrorKind::BuiltinLookup: return "builtin-lookup-failure";
    case ErrorKind::Shape: return "shape-error";
    case ErrorKind::LengthMismatch: return "length-mismatch";
    case ErrorKind::PredicateType: return "predicate-type-error";
    case ErrorKind::ArityMismatch: return "arity-mismatch";
    case ErrorKind::AddRulesType: return "addrules-type-error";
    case ErrorKind::UnknownSwitch: return "unknown-switch";
    case ErrorKind::UnknownPort: return "unknown-port";
    case ErrorKind::UnknownHost: return "unknown-host";
    case ErrorKind::SwitchNotInEvent: return "switch-not-in-event";
    case ErrorKind::UnknownQuery: return "unknown-query";
    case ErrorKind::InvalidValue: return "invalid-value";
    case ErrorKind::Parse: return "parse-error";
    case ErrorKind::Config: return "config-error";
  }
  return "error";
}

namespace {

std::string located(int line, int column, const std::string& message) {
  std::ostringstream os;
  os << line << ":" << column << ": " << message;
  return os.str();
}

std::string expected_message(const std::vector<std::string>& expected, const std::string& found) {
  std::ostringstream os;
  os << "expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
    os << expected[i];
  }
  os << ", found " << found;
  return os.str();
}

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected, const std::string& found)
    : Error(ErrorKind::Parse, located(line, column, expected_message(expected, found))),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

ParseError::ParseError(int line, int column, const std::string& message)
    : Error(ErrorKind::Parse, located(line, column, message)), line_(line), column_(column) {}

}  // namespace imnet
