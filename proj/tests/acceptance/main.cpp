// SPDX-License-Identifier: Apache-2.0
// Acceptance runner: runs every suite, then prints one PASS/FAIL line per
// criterion. A criterion passes when all of its tests ran and passed.
#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace {

struct Criterion {
  const char* title;
  std::vector<std::string> suites;
  int tests = 0;
  int failed = 0;
};

std::array<Criterion, 6> criteria = {{
    {"golden trace, example 1 (5 states, exact, < 1 s)", {"GoldenExample1"}},
    {"golden trace, example 2 (7 states, exact, < 1 s)", {"GoldenExample2"}},
    {"inference rule coverage (15 rules)", {"RuleCoverage"}},
    {"property suites (>= 100 cases each)", {"PropertyTransformers", "PropertyStatements", "PropertySyntax"}},
    {"fabric vs brute-force simulator (1000 packets, conservation)", {"FabricOracle"}},
    {"determinism (3 runs byte-identical)", {"Determinism"}},
}};

class CriterionListener : public ::testing::EmptyTestEventListener {
  void OnTestEnd(const ::testing::TestInfo& info) override {
    for (Criterion& c : criteria) {
      for (const std::string& s : c.suites) {
        if (s != info.test_suite_name()) continue;
        ++c.tests;
        if (!info.result()->Passed()) ++c.failed;
      }
    }
  }

  void OnTestProgramEnd(const ::testing::UnitTest&) override {
    std::printf("\n");
    for (std::size_t i = 0; i < criteria.size(); ++i) {
      const Criterion& c = criteria[i];
      const bool pass = c.tests > 0 && c.failed == 0;
      std::printf("%s criterion %zu: %s [%d tests, %d failed]\n", pass ? "PASS" : "FAIL", i + 1, c.title, c.tests,
                  c.failed);
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  ::testing::UnitTest::GetInstance()->listeners().Append(new CriterionListener);
  const int rc = RUN_ALL_TESTS();
  for (const Criterion& c : criteria) {
    if (c.tests == 0 || c.failed > 0) return 1;
  }
  return rc;
}
