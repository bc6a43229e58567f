// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "imnet/error.hpp"
#include "imnet/executor.hpp"
#include "imnet/format.hpp"
#include "imnet/printer.hpp"
#include "support/exec_programs.hpp"
#include "support/generators.hpp"

namespace imnet {
namespace {

using namespace ast;
using testing::Gen;

constexpr int kCases = 200;

// Runs f; returns the error kind if it threw.
template <class F>
std::optional<ErrorKind> attempt(F&& f) {
  try {
    f();
    return std::nullopt;
  } catch (const Error& e) {
    return e.kind();
  }
}

bool is_prefix(const std::vector<HistoryEntry>& a, const std::vector<HistoryEntry>& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

TEST(PropertyStatements, AssignFrame) {
  int ran = 0;
  for (int c = 0; c < kCases; ++c) {
    Gen g(20000 + c);
    const MachineState s = testing::gen_exec_state(g);
    Fabric f(testing::exec_topology());
    const Stmt st = testing::gen_exec_stmt(g);
    const auto* a = std::get_if<Assign>(&st.node);
    if (!a) continue;
    MachineState out;
    if (attempt([&] { out = exec_assign(*a, s, f.view()); })) continue;
    ++ran;
    EXPECT_EQ(out.sigma, s.sigma);
    EXPECT_EQ(out.ir, s.ir);
    VariableState rest = out.gamma;
    rest.erase(a->target);
    VariableState before = s.gamma;
    before.erase(a->target);
    EXPECT_EQ(rest, before) << "only the target may change";
  }
  EXPECT_GE(ran, 100);
}

TEST(PropertyStatements, AddRulesFrameAndUnion) {
  for (int c = 0; c < kCases; ++c) {
    Gen g(21000 + c);
    const MachineState s = testing::gen_exec_state(g);
    const std::string src = g.coin() ? "fr" : "sr";
    const MachineState out = exec_add_rules(AddRules{src}, s);
    EXPECT_EQ(out.sigma, s.sigma);
    EXPECT_EQ(out.gamma, s.gamma);
    // ir' keeps ir as a prefix and contains every binding of the source exactly once.
    ASSERT_GE(out.ir.bindings.size(), s.ir.bindings.size());
    EXPECT_TRUE(std::equal(s.ir.bindings.begin(), s.ir.bindings.end(), out.ir.bindings.begin()));
    for (std::size_t i = 0; i < out.ir.bindings.size(); ++i) {
      for (std::size_t j = i + 1; j < out.ir.bindings.size(); ++j) {
        if (i >= s.ir.bindings.size() || j >= s.ir.bindings.size()) {
          EXPECT_FALSE(out.ir.bindings[i] == out.ir.bindings[j]);
        }
      }
    }
    const MachineState twice = exec_add_rules(AddRules{src}, out);
    EXPECT_EQ(twice.ir, out.ir) << "union is idempotent";
  }
}

TEST(PropertyStatements, RegisterFrameAndPostcondition) {
  for (int c = 0; c < kCases; ++c) {
    Gen g(22000 + c);
    MachineState s = testing::gen_exec_state(g);
    s = exec_add_rules(AddRules{g.coin() ? "fr" : "sr"}, s);
    Fabric f(testing::exec_topology());
    const auto history_before = f.histories();
    const MachineState out = exec_register(s, f);
    EXPECT_EQ(out.gamma, s.gamma);
    EXPECT_TRUE(out.ir.empty());
    EXPECT_EQ(f.histories(), history_before);
    for (const auto& [id, table] : f.tables()) {
      auto it = out.sigma.find(id);
      EXPECT_EQ(table, it == out.sigma.end() ? RuleList{} : it->second);
    }
    std::map<SwitchId, std::size_t> expected;
    for (const auto& [id, rl] : s.sigma) expected[id] += rl.size();
    for (const RuleBinding& b : s.ir.bindings) expected[b.sw] += b.rules.size();
    for (const auto& [id, n] : expected) {
      const std::size_t have = out.sigma.count(id) ? out.sigma.at(id).size() : 0;
      EXPECT_EQ(have, n) << id.name;
    }
    // Every staged rule appears at its switch, after the rules that were already there.
    for (const auto& [id, rl] : s.sigma) {
      EXPECT_TRUE(std::equal(rl.rules.begin(), rl.rules.end(), out.sigma.at(id).rules.begin()));
    }
    for (const RuleBinding& b : s.ir.bindings) {
      for (const Rule& r : b.rules.rules) {
        const auto& installed = out.sigma.at(b.sw).rules;
        EXPECT_NE(std::find(installed.begin(), installed.end(), r), installed.end());
      }
    }
  }
}

TEST(PropertyStatements, SendFrameAndHistoryGrowth) {
  for (int c = 0; c < kCases; ++c) {
    Gen g(23000 + c);
    const MachineState s = testing::gen_exec_state(g);
    Fabric f(testing::exec_topology());
    f.sync_tables(s.sigma);
    const auto before = f.histories();
    MachineState out;
    const auto err = attempt([&] { out = exec_send(Send{"snd"}, s, f); });
    if (err) {
      EXPECT_EQ(f.histories(), before) << "failed Send leaves history untouched";
      continue;
    }
    EXPECT_EQ(out, s);
    std::size_t grown = 0;
    for (const auto& [id, h] : f.histories()) {
      EXPECT_TRUE(is_prefix(before.at(id), h));
      grown += h.size() - before.at(id).size();
    }
    EXPECT_EQ(grown, std::get<Event>(s.gamma.at("snd")).size());
  }
}

TEST(PropertyStatements, OnlySendTouchesHistory) {
  for (int c = 0; c < kCases; ++c) {
    Gen g(24000 + c);
    const MachineState s = testing::gen_exec_state(g);
    Fabric f(testing::exec_topology());
    const Stmt st = testing::gen_exec_stmt(g);
    if (std::holds_alternative<Send>(st.node)) continue;
    const auto before = f.histories();
    attempt([&] { exec_stmt(st, s, f); });
    EXPECT_EQ(f.histories(), before) << print_stmt(st);
  }
}

TEST(PropertyStatements, FailedStatementLeavesFabricUntouched) {
  for (int c = 0; c < kCases; ++c) {
    Gen g(25000 + c);
    MachineState s = testing::gen_exec_state(g);
    // A binding to an unknown switch makes Register fail.
    s.ir.unite({{RuleBinding{SwitchId{"nowhere"}, RuleList{}}}});
    Fabric f(testing::exec_topology());
    f.sync_tables(s.sigma);
    const auto tables = f.tables();
    EXPECT_EQ(attempt([&] { exec_register(s, f); }), ErrorKind::UnknownSwitch);
    EXPECT_EQ(f.tables(), tables);
  }
}

TEST(PropertyStatements, SeqAssociativity) {
  int both_ok = 0;
  for (int c = 0; c < kCases; ++c) {
    Gen g(26000 + c);
    const MachineState s = testing::gen_exec_state(g);
    const Stmt a = testing::gen_exec_stmt(g);
    const Stmt b = testing::gen_exec_stmt(g);
    const Stmt d = testing::gen_exec_stmt(g);
    Fabric f1(testing::exec_topology());
    Fabric f2(testing::exec_topology());
    MachineState left, right;
    const auto e1 = attempt([&] { left = exec_stmt(seq(seq(a, b), d), s, f1); });
    const auto e2 = attempt([&] { right = exec_stmt(seq(a, seq(b, d)), s, f2); });
    ASSERT_EQ(e1, e2) << print_stmt(a) << "; " << print_stmt(b) << "; " << print_stmt(d);
    EXPECT_EQ(f1.tables(), f2.tables());
    EXPECT_EQ(f1.histories(), f2.histories());
    if (e1) continue;
    ++both_ok;
    EXPECT_EQ(left, right);
  }
  EXPECT_GE(both_ok, 100);
}

TEST(PropertyStatements, RunIsDeterministic) {
  for (int c = 0; c < kCases; ++c) {
    Gen g(27000 + c);
    const MachineState s = testing::gen_exec_state(g);
    std::vector<Stmt> stmts;
    for (std::size_t i = 0; i < 5; ++i) stmts.push_back(testing::gen_exec_stmt(g));
    const Program p{{}, sequence(stmts)};
    auto run = [&] {
      Fabric f(testing::exec_topology());
      try {
        return run_program(p, f, s).trace;
      } catch (const ExecError& e) {
        return e.trace();
      }
    };
    EXPECT_EQ(run(), run());
  }
}

}  // namespace
}  // namespace imnet
