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

#include "confix/syntax/cfg.hpp"
#include "confix/syntax/parser.hpp"
#include "confix/syntax/printer.hpp"
#include "confix/syntax/subexpr.hpp"
#include "test_util.hpp"

namespace confix {
namespace {

using testing::load_corpus;
using testing::routine_ref;

TEST(Parser, MinimalProgram) {
  Program p = parse_program("class C feature f do end end");
  ASSERT_EQ(p.classes.size(), 1u);
  ASSERT_EQ(p.classes[0].routines.size(), 1u);
  EXPECT_TRUE(p.classes[0].routines[0].body.empty());
}

TEST(Parser, UndeclaredIdentifierIsTypeError) {
  try {
    parse_program("class C feature f do x := 1 end end");
    FAIL() << "expected an error";
  } catch (const CdlError& e) {
    ASSERT_EQ(e.diagnostics().size(), 1u);
    EXPECT_EQ(e.diagnostics()[0].kind, DiagnosticKind::kType);
    EXPECT_NE(e.diagnostics()[0].message.find("'x'"), std::string::npos);
  }
}

TEST(Parser, SyntaxErrorCarriesPosition) {
  try {
    parse_program("class C feature\n  f do x := end end");
    FAIL() << "expected an error";
  } catch (const CdlError& e) {
    EXPECT_EQ(e.diagnostics()[0].kind, DiagnosticKind::kSyntax);
    EXPECT_EQ(e.diagnostics()[0].pos.line, 2);
  }
}

TEST(Parser, DuplicateNames) {
  EXPECT_THROW(parse_program("class C feature f do end f do end end"), CdlError);
  EXPECT_THROW(parse_program("class C feature end class C feature end"), CdlError);
  EXPECT_THROW(parse_program("class C feature f (a, a: INTEGER) do end end"), CdlError);
  EXPECT_THROW(parse_program("class C feature f require t: True t: True do end end"), CdlError);
}

TEST(Parser, ArgumentsAreReadOnly) {
  EXPECT_THROW(parse_program("class C feature f (i: INTEGER) do i := 1 end end"), CdlError);
}

TEST(Parser, TypeErrors) {
  EXPECT_THROW(parse_program("class C feature b: BOOLEAN f do b := 1 end end"), CdlError);
  EXPECT_THROW(parse_program("class C feature f do if 1 then end end end"), CdlError);
  EXPECT_THROW(parse_program("class C feature x: D end"), CdlError);
  EXPECT_THROW(parse_program("class C feature q: INTEGER do end f do q end end"), CdlError);
  EXPECT_THROW(parse_program("class C create g feature q: INTEGER do end end"), CdlError);
}

TEST(Parser, ComparisonsDoNotChain) {
  EXPECT_THROW(parse_program("class C feature f: BOOLEAN do Result := 0 <= 1 <= 2 end end"),
               CdlError);
}

TEST(Parser, MoveItemPrecondition) {
  Program p = load_corpus("sorted_set.cdl");
  const RoutineDecl& r = p.routine(routine_ref(p, "SORTED_SET.move_item"));
  ASSERT_EQ(r.require.size(), 2u);
  EXPECT_EQ(print(r.require[0].expr), "v /= Void");
  EXPECT_EQ(print(r.require[1].expr), "has (v)");
  EXPECT_EQ(r.location_count, 10);
}

TEST(Parser, UnqualifiedFeatureIsCallOnCurrent) {
  Program p = load_corpus("sorted_set.cdl");
  const RoutineRef ref = routine_ref(p, "SORTED_SET.before");
  ExprPtr a = parse_expression("index", p, ref);
  ExprPtr b = parse_expression("Current.index", p, ref);
  EXPECT_TRUE(structurally_equal(a, b));
  EXPECT_EQ(print(b), "index");
  EXPECT_TRUE(a->type.is_integer());
}

TEST(Locations, PreOrderWithLoopHeaderFirst) {
  Program p = load_corpus("sorted_set.cdl");
  const RoutineDecl& r = p.routine(routine_ref(p, "SORTED_SET.move_item"));
  const char* expected[] = {"idx := index", "until found or after", "start",
                            "found := v = item", "if not found", "forth",
                            "check found_it: found and not after end", "remove",
                            "go_i_th (idx)", "put_left (v)"};
  for (int l = 1; l <= 10; ++l) {
    const Stmt* s = find_stmt(r.body, l);
    ASSERT_NE(s, nullptr);
    EXPECT_EQ(print_head(*s), expected[l - 1]) << "location " << l;
  }
  EXPECT_EQ(find_stmt(r.body, 11), nullptr);
}

// Hand-enumerated successor lists of move_item.
TEST(Cfg, MoveItemEdges) {
  Program p = load_corpus("sorted_set.cdl");
  const RoutineDecl& r = p.routine(routine_ref(p, "SORTED_SET.move_item"));
  ControlFlowGraph g = build_cfg(r);
  const std::vector<std::pair<int, int>> expected = {{1, 3}, {2, 4}, {2, 7}, {3, 2}, {4, 5},
                                                     {5, 2}, {5, 6}, {6, 2}, {7, 8}, {8, 9},
                                                     {9, 10}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_EQ(g.entry(), 1);
  ControlFlowGraph with_exit = build_cfg(r, {}, true);
  EXPECT_TRUE(with_exit.has_edge(10, 11));
  EXPECT_EQ(with_exit.node_count(), 11);
}

TEST(Cfg, LoopBodyAssignmentToRemoveIsFour) {
  Program p = load_corpus("sorted_set.cdl");
  const RoutineDecl& r = p.routine(routine_ref(p, "SORTED_SET.move_item"));
  ControlFlowGraph g = build_cfg(r);
  // found := v = item (4) -> if (5) -> loop header (2) -> check (7) -> remove (8)
  EXPECT_EQ(g.distance(4, 8), 4);
  EXPECT_EQ(g.distance(8, 8), 0);
  EXPECT_EQ(g.distance(9, 8), std::nullopt);
}

TEST(Cfg, StraightLineIsPath) {
  Program p = parse_program(
      "class C feature x: INTEGER f do x := 1 x := 2 x := 3 x := 4 end end");
  ControlFlowGraph g = build_cfg(p.classes[0].routines[0]);
  EXPECT_EQ(g.edges().size(), 3u);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_TRUE(g.has_edge(3, 4));
}

TEST(Cfg, EmptyLoopBodyLoopsOnHeader) {
  Program p = parse_program("class C feature f do from until True loop end end end");
  ControlFlowGraph g = build_cfg(p.classes[0].routines[0]);
  EXPECT_TRUE(g.has_edge(1, 1));
  EXPECT_EQ(g.edges().size(), 1u);
}

TEST(Cfg, IfJoins) {
  Program p = parse_program(
      "class C feature x: INTEGER f do if x = 0 then x := 1 else x := 2 end x := 3 end end");
  ControlFlowGraph g = build_cfg(p.classes[0].routines[0]);
  const std::vector<std::pair<int, int>> expected = {{1, 2}, {1, 3}, {2, 4}, {3, 4}};
  EXPECT_EQ(g.edges(), expected);
}

std::set<std::string> printed(const ExprSet& s) {
  std::set<std::string> out;
  for (const ExprPtr& e : s) out.insert(print(e));
  return out;
}

TEST(Subexpr, IndexEqualsZero) {
  Program p = load_corpus("sorted_set.cdl");
  ExprPtr e = parse_expression("index = 0", p, routine_ref(p, "SORTED_SET.before"));
  EXPECT_EQ(printed(sub_of_expression(e)), (std::set<std::string>{"index = 0", "index", "0"}));
}

TEST(Subexpr, SumAndAtom) {
  Program p = parse_program("class C feature a: INTEGER b: INTEGER f do end end");
  const RoutineRef f{0, 0};
  EXPECT_EQ(printed(sub_of_expression(parse_expression("a + b", p, f))),
            (std::set<std::string>{"a + b", "a", "b"}));
  EXPECT_EQ(printed(sub_of_expression(parse_expression("a", p, f))),
            (std::set<std::string>{"a"}));
}

TEST(Subexpr, Locations) {
  Program p = load_corpus("sorted_set.cdl");
  const RoutineDecl& r = p.routine(routine_ref(p, "SORTED_SET.move_item"));
  EXPECT_EQ(printed(sub_of_location(*find_stmt(r.body, 9))), (std::set<std::string>{"idx"}));
  EXPECT_TRUE(sub_of_location(*find_stmt(r.body, 8)).empty());
  EXPECT_EQ(printed(sub_of_location(*find_stmt(r.body, 5))),
            (std::set<std::string>{"not found", "found"}));
  Program q = parse_program("class C feature x: INTEGER f do x := 0 end end");
  EXPECT_EQ(printed(sub_of_location(q.classes[0].routines[0].body[0])),
            (std::set<std::string>{"0"}));
}

TEST(Subexpr, Monotone) {
  Program p = load_corpus("sorted_set.cdl");
  ExprPtr e = parse_expression("0 <= idx and idx <= count + 1", p,
                               routine_ref(p, "SORTED_SET.move_item"));
  const ExprSet all = sub_of_expression(e);
  for (const ExprPtr& s : all) {
    for (const ExprPtr& t : sub_of_expression(s)) EXPECT_TRUE(all.count(t)) << print(t);
  }
}

TEST(Printer, PrecedenceAndNegatives) {
  Program p = parse_program("class C feature a: INTEGER b: BOOLEAN f do end end");
  const RoutineRef f{0, 0};
  for (const char* text : {"a - (a - 1)", "a - -1", "-a + 1", "-(-1)", "not (a = 1)",
                           "not b = b", "not (not b)", "(b or b) and b", "b or b and b",
                           "(a < 1) = b", "a + 1 <= a - 1"}) {
    ExprPtr e = parse_expression(text, p, f);
    ExprPtr back = parse_expression(print(e), p, f);
    EXPECT_TRUE(structurally_equal(e, back)) << text << " printed as " << print(e);
  }
  EXPECT_EQ(print(parse_expression("a - -1", p, f)), "a - (-1)");
  EXPECT_EQ(print(make_unary(UnaryOp::kNeg, make_int(1))), "-(1)");
}

TEST(Printer, FixMarker) {
  Program p = load_corpus("sorted_set.cdl");
  RoutineDecl r = p.routine(routine_ref(p, "SORTED_SET.move_item"));
  r.body[3].fix_marker = true;
  EXPECT_NE(print(r).find("remove  -- fix"), std::string::npos);
}

}  // namespace
}  // namespace confix
