// SPDX-License-Identifier: Apache-2.0
#include "imnet/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "imnet/error.hpp"
#include "imnet/executor.hpp"
#include "imnet/io.hpp"
#include "imnet/parser.hpp"
#include "imnet/trace.hpp"

namespace imnet::cli {

namespace {

void report(std::ostream& err, const std::string& where, const Error& e) {
  err << where << ": " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
}

void drain(Fabric& fabric, const std::string& phase, std::size_t& seq, std::ostringstream& trace) {
  for (const ProcessingRecord& rec : fabric.process_pending()) trace << packet_record(phase, seq++, rec) << "\n";
}

}  // namespace

int cmd_check(const std::string& program_path, std::ostream& out, std::ostream& err) {
  std::string source;
  try {
    source = read_file(program_path);
  } catch (const Error& e) {
    report(err, program_path, e);
    return kConfigError;
  }
  try {
    const ast::Program p = parse_program(source);
    out << program_path << ": ok (" << p.defs.size() << " definitions)\n";
    return kOk;
  } catch (const Error& e) {
    err << program_path << ":" << e.what() << "\n";
    return kProgramError;
  }
}

int cmd_run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  TopologyFile topo;
  VariableState gamma;
  std::vector<Injection> injections;
  std::string source;
  try {
    topo = load_topology(config.topology);
    if (config.bindings) gamma = load_bindings(*config.bindings);
    if (config.injections) injections = load_injections(*config.injections);
    source = read_file(config.program);
  } catch (const Error& e) {
    report(err, "config", e);
    return kConfigError;
  }

  FabricConfig fc;
  fc.miss = config.default_action.value_or(topo.default_action.value_or(MissBehavior::SendController));
  fc.global_broadcast = config.global_broadcast;
  fc.hop_budget = config.hop_budget;
  Fabric fabric(std::move(topo.topology), fc);

  std::ostringstream trace;
  int status = kOk;
  std::size_t seq = 0;

  auto inject = [&](InjectPhase phase) {
    for (const Injection& inj : injections) {
      if (inj.phase == phase) fabric.inject_packet(inj.at, inj.packet);
    }
  };

  try {
    inject(InjectPhase::Before);
  } catch (const Error& e) {
    report(err, "injections", e);
    return kConfigError;
  }
  drain(fabric, "before", seq, trace);

  try {
    const ast::Program program = parse_program(source);
    const ExecOutcome outcome = run_program(program, fabric, MachineState{{}, gamma, {}});
    for (std::size_t i = 0; i < outcome.trace.size(); ++i) trace << state_record(i, outcome.trace[i]) << "\n";
  } catch (const ExecError& e) {
    for (std::size_t i = 0; i < e.trace().size(); ++i) trace << state_record(i, e.trace()[i]) << "\n";
    trace << error_record(e.label(), e) << "\n";
    report(err, config.program, e);
    status = kProgramError;
  } catch (const Error& e) {
    trace << error_record("program", e) << "\n";
    err << config.program << ":" << e.what() << "\n";
    status = kProgramError;
  }

  if (status == kOk) {
    try {
      inject(InjectPhase::After);
    } catch (const Error& e) {
      report(err, "injections", e);
      return kConfigError;
    }
    if (config.drain) drain(fabric, "after", seq, trace);
  }

  if (config.trace) {
    std::ofstream file(*config.trace, std::ios::binary | std::ios::trunc);
    file << trace.str();
    if (!file) {
      err << "cannot write " << *config.trace << "\n";
      return kConfigError;
    }
  } else {
    out << trace.str();
  }
  return status;
}

int cmd_diff_trace(const std::string& actual_path, const std::string& golden_path, std::ostream& out,
                   std::ostream& err) {
  try {
    const auto diff = diff_traces(read_file(actual_path), read_file(golden_path));
    if (!diff) {
      out << "traces match\n";
      return kOk;
    }
    out << "traces differ at record " << diff->index << "\n";
    out << "  actual: " << diff->actual.value_or("<end of trace>") << "\n";
    out << "  golden: " << diff->golden.value_or("<end of trace>") << "\n";
    return kProgramError;
  } catch (const Error& e) {
    report(err, "diff-trace", e);
    return kConfigError;
  }
}

}  // namespace imnet::cli
