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

#include "confix/runtime/interpreter.hpp"
#include "confix/syntax/cfg.hpp"
#include "confix/syntax/parser.hpp"
#include "confix/syntax/printer.hpp"
#include "test_util.hpp"

namespace confix {
namespace {

using testing::create;
using testing::invoke;
using testing::load_corpus;
using testing::move_item_test;
using testing::routine_ref;

class SortedSet : public ::testing::Test {
 protected:
  Program program = load_corpus("sorted_set.cdl");
  RoutineRef move_item = routine_ref(program, "SORTED_SET.move_item");
};

TEST_F(SortedSet, CursorAfterViolatesGoIthAtCallSite) {
  RunResult r = run_test(program, move_item_test(4));
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.violation->kind, ViolationKind::kPrecondition);
  EXPECT_EQ(r.violation->location, (Location{move_item, 9}));
  EXPECT_EQ(r.violation->clause_id(program), "go_i_th.valid_index");
  EXPECT_EQ(print(r.violation->call_site), "go_i_th (idx)");
}

TEST_F(SortedSet, CursorBeforeViolatesPutLeftAtCallSite) {
  RunResult r = run_test(program, move_item_test(0));
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.violation->location, (Location{move_item, 10}));
  EXPECT_EQ(r.violation->clause_id(program), "put_left.not_before");
}

TEST_F(SortedSet, InteriorCursorPasses) {
  for (int cursor : {1, 2, 3}) {
    EXPECT_EQ(run_test(program, move_item_test(cursor)).verdict, Verdict::kPass) << cursor;
  }
}

TEST_F(SortedSet, DirectPreconditionViolationIsInvalid) {
  TestCase t;
  t.steps = {create("s", "SORTED_SET", "make"), invoke("s", "go_i_th", {TestArg::Int(5)})};
  RunResult r = run_test(program, t);
  EXPECT_EQ(r.verdict, Verdict::kInvalid);
  EXPECT_FALSE(r.violation.has_value());
}

TEST_F(SortedSet, EmptyTestPasses) {
  RunResult r = run_test(program, TestCase{});
  EXPECT_EQ(r.verdict, Verdict::kPass);
  EXPECT_TRUE(r.trace.steps.empty());
}

TEST_F(SortedSet, Deterministic) {
  RunResult a = run_test(program, move_item_test(4));
  RunResult b = run_test(program, move_item_test(4));
  ASSERT_EQ(a.trace.steps.size(), b.trace.steps.size());
  for (std::size_t i = 0; i < a.trace.steps.size(); ++i) {
    EXPECT_EQ(a.trace.steps[i].location, b.trace.steps[i].location);
  }
}

std::vector<int> steps_at(const Trace& t, Location l) {
  std::vector<int> out;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    if (t.steps[i].location == l) out.push_back(static_cast<int>(i));
  }
  return out;
}

TEST_F(SortedSet, EvalAtRemove) {
  RunResult r = run_test(program, move_item_test(2));
  const std::vector<int> at_remove = steps_at(r.trace, Location{move_item, 8});
  ASSERT_EQ(at_remove.size(), 1u);
  const int step = at_remove[0];
  auto v_void = eval_at(r.trace, step, parse_expression("v = Void", program, move_item));
  ASSERT_TRUE(v_void.has_value());
  EXPECT_EQ(*v_void, Value::Bool(false));
  EXPECT_EQ(eval_at(r.trace, step, parse_expression("idx", program, move_item)), Value::Int(2));
  EXPECT_EQ(eval_at(r.trace, step, parse_expression("index", program, move_item)),
            Value::Int(2));
  // Result is not in scope of a command.
  EXPECT_EQ(eval_at(r.trace, step, make_var("Result", VarKind::kResult, Type::Boolean())),
            std::nullopt);
  EXPECT_EQ(eval_at(r.trace, step, make_var("nope", VarKind::kLocal, Type::Integer())),
            std::nullopt);
}

TEST_F(SortedSet, EvalAtIsPure) {
  RunResult r = run_test(program, move_item_test(2));
  const int step = steps_at(r.trace, Location{move_item, 8})[0];
  const Snapshot& snap = r.trace.snapshots[r.trace.steps[step].snapshot];
  const Heap before = snap.heap;
  std::vector<Value> fields_before;
  for (int id = 0; id < before.size(); ++id) {
    for (const Value& v : before.at(id).fields) fields_before.push_back(v);
  }
  // `item` runs node_at's loop; a query with side effects would show up here.
  ASSERT_TRUE(eval_at(r.trace, step, parse_expression("item = v", program, move_item)));
  std::vector<Value> fields_after;
  for (int id = 0; id < snap.heap.size(); ++id) {
    for (const Value& v : snap.heap.at(id).fields) fields_after.push_back(v);
  }
  EXPECT_EQ(fields_before, fields_after);
}

TEST_F(SortedSet, EvalAtVoidDereferenceAndPreconditionAreUndefined) {
  RunResult r = run_test(program, move_item_test(2));
  const int step = steps_at(r.trace, Location{move_item, 8})[0];
  EXPECT_EQ(eval_at(r.trace, step, parse_expression("node_at (0).item = v", program, move_item)),
            std::nullopt);
  // After remove the last node's successor is Void.
  EXPECT_EQ(eval_at(r.trace, step,
                    parse_expression("first_node.right.right.right.item = v", program, move_item)),
            std::nullopt);
}

TEST_F(SortedSet, TracesFollowCfg) {
  for (int cursor : {0, 1, 2, 3, 4}) {
    RunResult r = run_test(program, move_item_test(cursor));
    std::map<int, int> last;  // activation -> last location
    for (const TraceStep& s : r.trace.steps) {
      const RoutineDecl& decl = program.routine(s.location.routine);
      ControlFlowGraph g = build_cfg(decl, s.location.routine, true);
      auto it = last.find(s.activation);
      if (it == last.end()) {
        EXPECT_EQ(s.location.index, g.entry());
      } else {
        EXPECT_TRUE(g.has_edge(it->second, s.location.index))
            << program.routine_name(s.location.routine) << " " << it->second << "->"
            << s.location.index;
      }
      last[s.activation] = s.location.index;
    }
  }
}

TEST(Runtime, PostconditionAtExitLocation) {
  Program p = parse_program(
      "class C create make feature x: INTEGER make do end "
      "bump do x := x + 2 ensure one_more: x = 1 end "
      "run do bump end end");
  TestCase t;
  t.steps = {create("c", "C", "make"), invoke("c", "run")};
  RunResult r = run_test(p, t);
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.violation->kind, ViolationKind::kPostcondition);
  EXPECT_EQ(r.violation->location, (Location{RoutineRef{0, 1}, 2}));
  EXPECT_EQ(r.violation->clause_id(p), "bump.one_more");
}

TEST(Runtime, CheckAndVoidCall) {
  Program p = parse_program(
      "class C create make feature x: INTEGER next: C make do end "
      "chk do x := 1 check small: x < 1 end end "
      "nxt do x := next.x end end");
  TestCase t;
  t.steps = {create("c", "C", "make"), invoke("c", "chk")};
  RunResult r = run_test(p, t);
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.violation->kind, ViolationKind::kCheck);
  EXPECT_EQ(r.violation->location.index, 2);
  t.steps = {create("c", "C", "make"), invoke("c", "nxt")};
  r = run_test(p, t);
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.violation->kind, ViolationKind::kVoidCall);
  EXPECT_EQ(r.violation->clause_id(p), "-");
}

TEST(Runtime, NonterminationTimesOut) {
  Program p = parse_program("class C create make feature make do end spin do from until False loop end end end");
  TestCase t;
  t.steps = {create("c", "C", "make"), invoke("c", "spin")};
  RunOptions o;
  o.step_budget = 1000;
  EXPECT_EQ(run_test(p, t, o).verdict, Verdict::kTimeout);
}

TEST(Runtime, ShortCircuit) {
  Program p = parse_program(
      "class C create make feature next: C make do end "
      "ok: BOOLEAN do Result := next /= Void and next.next = Void end end");
  TestCase t;
  t.steps = {create("c", "C", "make"), invoke("c", "ok")};
  EXPECT_EQ(run_test(p, t).verdict, Verdict::kPass);
}

TEST(Runtime, ViolationInsideClauseCountsAsClause) {
  Program p = parse_program(
      "class C create make feature n: INTEGER make do end "
      "pos: BOOLEAN require n > 0 do Result := True end "
      "g require ready: pos do end "
      "run do g end end");
  TestCase t;
  t.steps = {create("c", "C", "make"), invoke("c", "run")};
  RunResult r = run_test(p, t);
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.violation->clause_id(p), "g.ready");
  EXPECT_EQ(r.violation->location, (Location{RoutineRef{0, 3}, 1}));
}

}  // namespace
}  // namespace confix
