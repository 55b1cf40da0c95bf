// Copyright 2026 The Confix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <set>
#include <sstream>

#include "confix/session/corpus.hpp"
#include "confix/session/session.hpp"
#include "confix/syntax/parser.hpp"
#include "confix/syntax/printer.hpp"
#include "test_util.hpp"

namespace confix {
namespace {

using testing::corpus_path;
using testing::load_corpus;
using testing::routine_ref;

std::vector<std::string> corpus_programs() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(CONFIX_CORPUS_DIR)) {
    if (entry.path().extension() == ".cdl") out.push_back(entry.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SessionConfig corpus_config(const std::string& name) {
  SessionConfig c;
  c.program_path = corpus_path(name + ".cdl");
  apply_config(c, read_config(corpus_path(name + ".conf")));
  return c;
}

TEST(Config, ParsesKeysCommentsAndRepeats) {
  const ConfigFile f = parse_config("# header\nseed = 4\n\n  tests=10  \nexpect = a ; b\nexpect = c\n");
  EXPECT_EQ(f.get("seed"), "4");
  EXPECT_EQ(f.get("tests"), "10");
  EXPECT_EQ(f.get("missing", "x"), "x");
  EXPECT_EQ(f.all("expect"), (std::vector<std::string>{"a ; b", "c"}));
  EXPECT_TRUE(f.has("seed"));
  EXPECT_THROW(parse_config("no equals sign\n"), std::runtime_error);
}

TEST(Config, AppliesToSession) {
  SessionConfig c;
  apply_config(c, parse_config("seed = 9\ntests = 7\nmax_steps = 3\ntargets = A, B\nalpha = 0.5\n"
                               "beta = 1/4\ngamma = 2\ntop = 4\nmax_components = 2\njobs = 3\n"));
  EXPECT_EQ(c.generation.seed, 9u);
  EXPECT_EQ(c.generation.tests, 7);
  EXPECT_EQ(c.generation.max_steps, 3);
  EXPECT_EQ(c.generation.target_classes, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(c.scores.alpha, Rational(1, 2));
  EXPECT_EQ(c.scores.beta, Rational(1, 4));
  EXPECT_EQ(c.scores.gamma, Rational(2));
  EXPECT_EQ(c.top, 4);
  EXPECT_EQ(c.max_components, 2);
  EXPECT_EQ(c.jobs, 3);
  EXPECT_TRUE(c.validate().empty());
  EXPECT_THROW(apply_config(c, parse_config("tests = many\n")), std::runtime_error);
  EXPECT_THROW(apply_config(c, parse_config("alpha = high\n")), std::runtime_error);
}

TEST(Config, RejectsInvalidCaps) {
  SessionConfig c;
  c.top = 0;
  EXPECT_FALSE(c.validate().empty());
  c = {};
  c.scores.alpha = 1;
  EXPECT_FALSE(c.validate().empty());
  c = {};
  c.caps.max_failing = 0;
  EXPECT_FALSE(c.validate().empty());
}

TEST(ExpectedFix, Parses) {
  const ExpectedFix e = parse_expected_fix("A.r:3:x.y ; guard ; p > 0 | q");
  EXPECT_EQ(e.fault, "A.r:3:x.y");
  EXPECT_EQ(e.mode, ExpectedFix::Mode::kGuard);
  EXPECT_EQ(e.alternatives, (std::vector<std::string>{"p > 0", "q"}));
  EXPECT_THROW(parse_expected_fix("A.r:3:x.y ; around ; p"), std::runtime_error);
  EXPECT_THROW(parse_expected_fix("A.r:3:x.y"), std::runtime_error);
}

class Normal : public ::testing::Test {
 protected:
  Program program = load_corpus("sorted_set.cdl");
  RoutineRef move_item = routine_ref(program, "SORTED_SET.move_item");
  std::string norm(const std::string& text) {
    return print(normalize(parse_expression(text, program, move_item)));
  }
};

TEST_F(Normal, Comparisons) {
  EXPECT_EQ(norm("idx > index"), norm("index < idx"));
  EXPECT_EQ(norm("idx >= index"), norm("index <= idx"));
  EXPECT_EQ(norm("not (idx <= index)"), norm("index < idx"));
  EXPECT_EQ(norm("not (idx < index)"), norm("index <= idx"));
  EXPECT_EQ(norm("not (idx = index)"), norm("index /= idx"));
  EXPECT_EQ(norm("not (not found)"), "found");
  EXPECT_EQ(norm("index = 0"), norm("0 = index"));
  EXPECT_NE(norm("idx < index"), norm("index < idx"));
  EXPECT_EQ(norm("found and idx > 1"), norm("found and 1 < idx"));
}

TEST(Corpus, ProgramsRoundTrip) {
  const auto names = corpus_programs();
  EXPECT_GE(names.size(), 5u);
  for (const std::string& name : names) {
    const Program p = load_corpus(name + ".cdl");
    const std::string text = print(p);
    const Program back = parse_program(text);
    EXPECT_TRUE(structurally_equal(p, back)) << name;
    EXPECT_EQ(print(back), text) << name;
  }
}

TEST(Corpus, PinnedSeedsReproduceExpectedFaults) {
  for (const std::string& name : corpus_programs()) {
    SCOPED_TRACE(name);
    const SessionConfig config = corpus_config(name);
    const Program program = load_program(config.program_path);
    const TestSuite suite = obtain_suite(program, config);
    std::set<std::string> keys;
    for (const auto& [key, tests] : suite.failing()) keys.insert(format_fault_key(program, key));
    const auto expects = read_config(corpus_path(name + ".conf")).all("expect");
    EXPECT_FALSE(expects.empty());
    for (const std::string& text : expects) {
      const ExpectedFix e = parse_expected_fix(text);
      EXPECT_TRUE(keys.count(e.fault)) << e.fault;
      const auto fault = parse_fault_key(program, e.fault);
      ASSERT_TRUE(fault);
      EXPECT_EQ(expected_routines(program, fault->location, e).size(), e.alternatives.size());
    }
  }
}

TEST(Corpus, ExpectedPatternIgnoresOperandOrder) {
  const Program program = load_corpus("sorted_set.cdl");
  const RoutineRef move_item = routine_ref(program, "SORTED_SET.move_item");
  const ExpectedFix e = parse_expected_fix(
      "SORTED_SET.move_item:9:go_i_th.valid_index ; before ; if idx > index then idx := idx - 1 end");
  const Location at{move_item, 9};
  auto patched = [&](const std::string& text) {
    RoutineDecl r = patch_routine(program.routine(move_item), 9,
                                  parse_statements(text, program, move_item));
    check_routine(program, move_item.class_index, r);
    return r;
  };
  EXPECT_TRUE(matches_expected(program, at, e, patched("if index < idx then idx := idx - 1 end; go_i_th (idx)")));
  EXPECT_TRUE(matches_expected(program, at, e, patched("if not (idx <= index) then idx := idx - 1 end; go_i_th (idx)")));
  EXPECT_FALSE(matches_expected(program, at, e, patched("idx := 1; go_i_th (idx)")));
  EXPECT_FALSE(matches_expected(program, at, e, patched("if idx > index then idx := idx + 1 end; go_i_th (idx)")));
}

TEST(Session, PutLeftFixIsReportedAndDeterministic) {
  const SessionConfig config = corpus_config("sorted_set");
  const Program program = load_program(config.program_path);
  const TestSuite suite = obtain_suite(program, config);
  const FaultKey key = *parse_fault_key(program, "SORTED_SET.move_item:10:put_left.not_before");
  const FixOutcome a = run_fix(program, suite, key, config);
  const FixOutcome b = run_fix(program, suite, key, config);
  std::ostringstream ta, tb;
  write_report_text(ta, a.report);
  write_report_text(tb, b.report);
  EXPECT_EQ(ta.str(), tb.str());
  const ExpectedFix e = parse_expected_fix(
      "x ; before ; if before then forth end | if index = 0 then forth end");
  bool found = false;
  for (const ReportedFix& f : a.report.fixes) {
    found = found || matches_expected(program, key.location, e, f.candidate->routine);
  }
  EXPECT_TRUE(found);
}

TEST(Session, EmptyPassingSetStillLocalizes) {
  const SessionConfig config = corpus_config("sorted_set");
  const Program program = load_program(config.program_path);
  TestSuite suite;
  TestRecord r;
  r.test = testing::move_item_test(4, "f");
  r.verdict = Verdict::kFail;
  r.fault = fault_key_of(program, *run_test(program, r.test).violation);
  suite.tests.push_back(r);
  const FixOutcome out = run_fix(program, suite, *r.fault, config);
  EXPECT_FALSE(out.localized.localization.ranked.empty());
  for (const Component& c : out.localized.localization.ranked) EXPECT_EQ(c.passing, 0);
  ASSERT_FALSE(out.report.diagnostics.empty());
  EXPECT_NE(std::find(out.report.diagnostics.begin(), out.report.diagnostics.end(),
                      "no passing tests enter SORTED_SET.move_item"),
            out.report.diagnostics.end());
}

TEST(Session, UnknownFaultIsAnError) {
  const SessionConfig config = corpus_config("sorted_set");
  const Program program = load_program(config.program_path);
  const TestSuite suite = obtain_suite(program, config);
  FaultKey key = *parse_fault_key(program, "SORTED_SET.move_item:9:go_i_th.valid_index");
  key.location.index = 3;
  EXPECT_THROW(run_localization(program, suite, key, config), std::runtime_error);
}

}  // namespace
}  // namespace confix
