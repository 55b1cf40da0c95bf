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

#include <set>

#include "confix/fixgen/fixgen.hpp"
#include "confix/syntax/parser.hpp"
#include "confix/syntax/printer.hpp"
#include "confix/syntax/subexpr.hpp"
#include "test_util.hpp"

namespace confix {
namespace {

using testing::load_corpus;
using testing::routine_ref;

std::set<std::string> printed(const std::vector<ExprPtr>& exprs) {
  std::set<std::string> out;
  for (const ExprPtr& e : exprs) out.insert(print(e));
  return out;
}

std::set<std::string> snippets(const std::vector<FixAction>& actions) {
  std::set<std::string> out;
  for (const FixAction& a : actions) {
    std::string s = print(a.snippet);
    while (!s.empty() && s.back() == '\n') s.pop_back();
    out.insert(s);
  }
  return out;
}

void strip_markers(std::vector<Stmt>& body) {
  for (Stmt& s : body) {
    s.fix_marker = false;
    for (auto* part : {&s.init_part, &s.loop_part, &s.then_part, &s.else_part}) strip_markers(*part);
  }
}

class MoveItem : public ::testing::Test {
 protected:
  Program program = load_corpus("sorted_set.cdl");
  RoutineRef move_item = routine_ref(program, "SORTED_SET.move_item");
  ExprPtr parse(const std::string& text) { return parse_expression(text, program, move_item); }
  const RoutineDecl& routine() const { return program.routine(move_item); }
};

TEST_F(MoveItem, DerivedExpressions) {
  EXPECT_EQ(printed(derive_expressions(parse("found"))),
            (std::set<std::string>{"True", "False", "not found"}));
  EXPECT_EQ(printed(derive_expressions(parse("idx"))),
            (std::set<std::string>{"0", "1", "-1", "idx + 1", "idx - 1"}));
  EXPECT_EQ(derive_expressions(parse("idx")).size(), 5u);
  EXPECT_TRUE(derive_expressions(parse("v")).empty());
}

TEST_F(MoveItem, TargetsOfCursorComparison) {
  const ExprPtr p = parse("idx > Current.index");
  const auto targets = target_expressions(program, move_item, p);
  EXPECT_EQ(printed(targets), (std::set<std::string>{"index", "idx"}));
  for (const ExprPtr& t : targets) EXPECT_TRUE(t->type.is_integer());
}

TEST_F(MoveItem, ArgumentsAreNotAssignable) {
  EXPECT_FALSE(is_modifiable(program, move_item, parse("v = Void")));
  EXPECT_TRUE(is_modifiable(program, move_item, parse("v")));
  EXPECT_TRUE(is_modifiable(program, move_item, parse("found")));
  EXPECT_FALSE(is_modifiable(program, move_item, parse("after")));
  EXPECT_FALSE(is_modifiable(program, move_item, parse("idx + 1")));
}

TEST_F(MoveItem, ModificationsOfCursorComparison) {
  const ExprPtr p = parse("idx > index");
  const auto mods =
      snippets(expression_modifications(program, move_item, p, parse("valid_cursor_index (idx)")));
  for (const char* s : {"idx := 0", "idx := 1", "idx := -1", "idx := idx + 1", "idx := idx - 1",
                        "index := 0", "index := 1", "index := -1", "index := index + 1",
                        "index := index - 1"}) {
    EXPECT_TRUE(mods.count(s)) << s;
  }
}

TEST_F(MoveItem, ReplacementsAtGoIth) {
  EXPECT_EQ(snippets(expression_replacements(program, move_item, 9, parse("idx > index"))),
            (std::set<std::string>{"go_i_th (idx - 1)", "go_i_th (idx + 1)", "go_i_th (0)",
                                   "go_i_th (1)", "go_i_th (-1)"}));
  EXPECT_TRUE(expression_replacements(program, move_item, 9, parse("idx + 1 > index")).empty());
}

TEST_F(MoveItem, ReplacementsInConditional) {
  std::set<std::string> heads;
  for (const FixAction& a : expression_replacements(program, move_item, 5, parse("found"))) {
    heads.insert(print_head(a.snippet));
  }
  EXPECT_TRUE(heads.count("if not (not found)"));
  EXPECT_TRUE(heads.count("if not True"));
  EXPECT_TRUE(heads.count("if not False"));
}

TEST_F(MoveItem, ReplacementIsReversible) {
  const Stmt* original = find_stmt(routine().body, 9);
  ASSERT_NE(original, nullptr);
  for (const FixAction& a : expression_replacements(program, move_item, 9, parse("idx > index"))) {
    const ExprPtr from = a.snippet.expr;
    const ExprPtr back = replace_subexpression(from, from->operands.at(0), a.target);
    EXPECT_TRUE(structurally_equal(back, original->expr)) << print(a.snippet);
  }
}

TEST_F(MoveItem, SchemasAtGoIth) {
  Component component;
  component.location = 9;
  component.value = true;
  const ExprPtr p = parse("idx > index");
  std::vector<FixAction> actions =
      expression_modifications(program, move_item, p, parse("valid_cursor_index (idx)"));
  const auto candidates = instantiate_candidates(program, move_item, component, p, actions);
  bool proper = false;
  for (const FixCandidate& c : candidates) {
    if (c.schema != FixSchema::kB || !c.action || print(c.action->snippet) != "idx := idx - 1\n") {
      continue;
    }
    std::vector<Stmt> expected = parse_statements("if idx > index then idx := idx - 1 end; go_i_th (idx)",
                                                  program, move_item);
    RoutineDecl want = patch_routine(routine(), 9, expected);
    check_routine(program, move_item.class_index, want);
    proper = proper || structurally_equal(want, c.routine);
  }
  EXPECT_TRUE(proper);
}

TEST_F(MoveItem, SchemaShapes) {
  Component component;
  component.location = 10;
  component.value = false;
  const ExprPtr p = parse("not before");
  const auto actions = expression_modifications(program, move_item, p, parse("not before"));
  const auto candidates = instantiate_candidates(program, move_item, component, p, actions);
  std::set<char> seen;
  for (const FixCandidate& c : candidates) {
    seen.insert(schema_letter(c.schema));
    EXPECT_EQ(print(c.fail), "before");
    std::vector<Stmt> replacement;
    const Stmt old = *find_stmt(routine().body, 10);
    switch (c.schema) {
      case FixSchema::kA:
        ASSERT_TRUE(c.action);
        EXPECT_EQ(c.action->kind, ActionKind::kModification);
        replacement = {c.action->snippet, old};
        break;
      case FixSchema::kB:
        replacement = {make_if(c.fail, {c.action->snippet}), old};
        break;
      case FixSchema::kC:
        EXPECT_FALSE(c.action);
        replacement = {make_if(complement(c.fail), {old})};
        break;
      case FixSchema::kD:
        replacement = {make_if(c.fail, {c.action->snippet}, {old})};
        break;
    }
    RoutineDecl want = patch_routine(routine(), 10, replacement);
    check_routine(program, move_item.class_index, want);
    EXPECT_TRUE(structurally_equal(want, c.routine)) << schema_letter(c.schema);
  }
  EXPECT_EQ(seen, (std::set<char>{'a', 'b', 'c', 'd'}));
}

TEST_F(MoveItem, ExitLocationTakesOnlyAppendingSchemas) {
  Component component;
  component.location = routine().exit_location();
  component.value = true;
  const ExprPtr p = parse("found");
  const auto actions = expression_modifications(program, move_item, p, p);
  const auto candidates = instantiate_candidates(program, move_item, component, p, actions);
  ASSERT_FALSE(candidates.empty());
  for (const FixCandidate& c : candidates) {
    EXPECT_TRUE(c.schema == FixSchema::kA || c.schema == FixSchema::kB);
    EXPECT_EQ(c.routine.body.size(), routine().body.size() + 1);
  }
}

TEST_F(MoveItem, PatchIsLocal) {
  const Stmt marker = parse_statements("start", program, move_item).front();
  RoutineDecl patched = patch_routine(routine(), 9, {marker, *find_stmt(routine().body, 9)});
  check_routine(program, move_item.class_index, patched);
  EXPECT_EQ(patched.location_count, routine().location_count + 1);
  for (int l = 1; l <= 8; ++l) {
    EXPECT_TRUE(structurally_equal(*find_stmt(patched.body, l), *find_stmt(routine().body, l)));
  }
  EXPECT_THROW(patch_routine(routine(), 42, {marker}), std::out_of_range);
}

TEST(Modifications, ReferenceTargetsGetCommandCalls) {
  const Program program = parse_program(R"(
class CURSOR
create
  make
feature
  position: INTEGER
  make
    do
    end
  forth
    do
      position := position + 1
    end
  at_end: BOOLEAN
    do
      Result := position > 3
    end
end

class USER
create
  make
feature
  c: CURSOR
  make
    do
      create c.make
    end
  run
    require
      done: c.at_end
    do
    end
  step (k: INTEGER)
    do
      run
    end
end
)");
  const RoutineRef step = testing::routine_ref(program, "USER.step");
  const ExprPtr p = parse_expression("c.at_end", program, step);
  const auto mods = snippets(expression_modifications(program, step, p, p));
  EXPECT_TRUE(mods.count("c.forth"));
  EXPECT_TRUE(expression_modifications(program, step, parse_expression("k > 0", program, step), p)
                  .empty());
}

class Pipeline : public ::testing::Test {
 protected:
  Program program = load_corpus("sorted_set.cdl");
  RoutineRef move_item = routine_ref(program, "SORTED_SET.move_item");

  std::vector<FixCandidate> candidates(FixgenStats* stats) {
    FaultInputs inputs;
    inputs.routine = move_item;
    for (int i : {1, 2, 3}) inputs.passing.push_back(testing::move_item_test(i, "p" + std::to_string(i)));
    inputs.failing.push_back(testing::move_item_test(4, "f"));
    auto fault = find_fault_context(
        program, *parse_fault_key(program, "SORTED_SET.move_item:9:go_i_th.valid_index"),
        inputs.failing);
    const Localization loc = localize(program, *fault, inputs);
    return generate_candidates(program, loc, {}, stats);
  }
};

TEST_F(Pipeline, CandidatesAreDistinctCheckedAndRoundTrip) {
  FixgenStats stats;
  const auto cands = candidates(&stats);
  ASSERT_FALSE(cands.empty());
  EXPECT_EQ(stats.generated, static_cast<int>(cands.size()) + stats.rejected + stats.duplicates);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const FixCandidate& c = cands[i];
    EXPECT_EQ(c.id, static_cast<int>(i) + 1);
    RoutineDecl plain = c.routine;
    strip_markers(plain.body);
    EXPECT_TRUE(seen.insert(print(plain)).second) << "duplicate candidate " << c.id;
    const Program applied = apply_candidate(program, c);
    const Program reparsed = parse_program(print(applied));
    EXPECT_TRUE(structurally_equal(applied, reparsed)) << print(c.routine);
  }
}

TEST_F(Pipeline, OtherRoutinesUntouched) {
  const auto cands = candidates(nullptr);
  ASSERT_FALSE(cands.empty());
  const Program applied = apply_candidate(program, cands.front());
  for (std::size_t c = 0; c < program.classes.size(); ++c) {
    for (std::size_t r = 0; r < program.classes[c].routines.size(); ++r) {
      if (RoutineRef{static_cast<int>(c), static_cast<int>(r)} == move_item) continue;
      EXPECT_TRUE(structurally_equal(program.classes[c].routines[r], applied.classes[c].routines[r]));
    }
  }
}

}  // namespace
}  // namespace confix
