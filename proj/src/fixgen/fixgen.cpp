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

#include "confix/fixgen/fixgen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "confix/syntax/parser.hpp"
#include "confix/syntax/printer.hpp"
#include "confix/syntax/subexpr.hpp"

namespace confix {

std::vector<ExprPtr> derive_expressions(const ExprPtr& e) {
  if (e->type.is_boolean()) {
    return {make_bool(true), make_bool(false), make_unary(UnaryOp::kNot, e)};
  }
  if (e->type.is_integer()) {
    return {make_int(0), make_int(1), make_int(-1), make_binary(BinaryOp::kPlus, e, make_int(1)),
            make_binary(BinaryOp::kMinus, e, make_int(1))};
  }
  return {};
}

namespace {

bool is_current_attribute(const Program& program, RoutineRef routine, const ExprPtr& e) {
  return e->kind == ExprKind::kCall && e->target && e->target->kind == ExprKind::kCurrent &&
         e->operands.empty() &&
         program.classes[static_cast<std::size_t>(routine.class_index)].find_attribute(e->name) >= 0;
}

bool is_assignable(const Program& program, RoutineRef routine, const ExprPtr& e) {
  if (e->kind == ExprKind::kVar) return e->var_kind != VarKind::kArgument;
  return is_current_attribute(program, routine, e);
}

// Maximal elements of `set` under the sub-expression order.
std::vector<ExprPtr> largest(const std::vector<ExprPtr>& set) {
  std::vector<ExprPtr> out;
  for (const ExprPtr& e : set) {
    const bool dominated = std::any_of(set.begin(), set.end(), [&](const ExprPtr& f) {
      return !structurally_equal(e, f) && is_subexpression(e, f);
    });
    if (!dominated) out.push_back(e);
  }
  return out;
}

bool conforms(const Type& value, const Type& slot) {
  if (slot.is_reference()) {
    return value.kind == TypeKind::kVoid ||
           (value.is_reference() && value.class_name == slot.class_name);
  }
  return value == slot;
}

// Expressions usable as an argument of type `type` inside `routine`.
std::vector<ExprPtr> argument_pool(const Program& program, RoutineRef routine, const Type& type) {
  const ClassDecl& cls = program.classes[static_cast<std::size_t>(routine.class_index)];
  const RoutineDecl& r = program.routine(routine);
  std::vector<ExprPtr> pool;
  for (const VarDecl& p : r.params) {
    if (conforms(p.type, type)) pool.push_back(make_var(p.name, VarKind::kArgument, p.type));
  }
  for (const VarDecl& l : r.locals) {
    if (conforms(l.type, type)) pool.push_back(make_var(l.name, VarKind::kLocal, l.type));
  }
  if (r.result_type && conforms(*r.result_type, type)) {
    pool.push_back(make_var("Result", VarKind::kResult, *r.result_type));
  }
  for (const AttributeDecl& a : cls.attributes) {
    if (conforms(a.type, type)) pool.push_back(make_call(make_current(cls.name), a.name, {}, a.type));
  }
  if (type.is_integer()) {
    for (std::int64_t v : {0, 1, -1}) pool.push_back(make_int(v));
  } else if (type.is_boolean()) {
    pool.push_back(make_bool(true));
    pool.push_back(make_bool(false));
  } else {
    pool.push_back(make_void());
  }
  return pool;
}

std::vector<std::vector<ExprPtr>> argument_sets(const Program& program, RoutineRef routine,
                                                const RoutineDecl& command, const ExprPtr& clause,
                                                int cap) {
  std::vector<std::vector<ExprPtr>> sets{{}};
  for (const VarDecl& p : command.params) {
    const auto pool = argument_pool(program, routine, p.type);
    std::vector<std::vector<ExprPtr>> next;
    for (const auto& prefix : sets) {
      for (const ExprPtr& a : pool) {
        next.push_back(prefix);
        next.back().push_back(a);
      }
    }
    sets = std::move(next);
  }
  if (static_cast<int>(sets.size()) <= cap) return sets;
  std::vector<std::pair<int, std::size_t>> order;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    int score = 0;
    for (const ExprPtr& a : sets[i]) score += clause ? expression_proximity(a, clause) : 0;
    order.emplace_back(-score, i);
  }
  std::stable_sort(order.begin(), order.end());
  std::vector<std::vector<ExprPtr>> out;
  for (int k = 0; k < cap; ++k) out.push_back(sets[order[static_cast<std::size_t>(k)].second]);
  return out;
}

// The statement with `from` replaced by `to` in the expressions that make up
// sub(stmt); nested blocks are left alone.
Stmt replace_in_location(const Stmt& stmt, const ExprPtr& from, const ExprPtr& to) {
  Stmt out = stmt;
  switch (stmt.kind) {
    case StmtKind::kIf:
    case StmtKind::kLoop:
    case StmtKind::kAssign:
      out.expr = replace_subexpression(stmt.expr, from, to);
      break;
    case StmtKind::kCall: {
      auto call = std::make_shared<Expr>(*stmt.expr);
      for (ExprPtr& a : call->operands) a = replace_subexpression(a, from, to);
      out.expr = call;
      break;
    }
    case StmtKind::kCreate:
      for (ExprPtr& a : out.args) a = replace_subexpression(a, from, to);
      break;
    case StmtKind::kCheck:
      break;
  }
  return out;
}

bool replace_at(std::vector<Stmt>& block, int location, const std::vector<Stmt>& replacement) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (block[i].location == location) {
      block.erase(block.begin() + static_cast<std::ptrdiff_t>(i));
      block.insert(block.begin() + static_cast<std::ptrdiff_t>(i), replacement.begin(),
                   replacement.end());
      return true;
    }
    for (auto* part : {&block[i].init_part, &block[i].loop_part, &block[i].then_part,
                       &block[i].else_part}) {
      if (replace_at(*part, location, replacement)) return true;
    }
  }
  return false;
}

Stmt marked(Stmt s) {
  s.fix_marker = true;
  return s;
}

void clear_markers(std::vector<Stmt>& block) {
  for (Stmt& s : block) {
    s.fix_marker = false;
    for (auto* part : {&s.init_part, &s.loop_part, &s.then_part, &s.else_part}) {
      clear_markers(*part);
    }
  }
}

std::string unmarked_text(const RoutineDecl& routine) {
  RoutineDecl copy = routine;
  clear_markers(copy.body);
  return print(copy);
}

}  // namespace

bool is_modifiable(const Program& program, RoutineRef routine, const ExprPtr& e) {
  if (e->type.is_reference()) return true;
  if (e->type.is_integer() || e->type.is_boolean()) return is_assignable(program, routine, e);
  return false;
}

std::vector<ExprPtr> target_expressions(const Program& program, RoutineRef routine,
                                        const ExprPtr& p) {
  std::vector<ExprPtr> modifiable;
  for (const ExprPtr& e : sub_with_current(p)) {
    if (is_modifiable(program, routine, e)) modifiable.push_back(e);
  }
  return largest(modifiable);
}

std::vector<FixAction> expression_modifications(const Program& program, RoutineRef routine,
                                                const ExprPtr& p, const ExprPtr& clause,
                                                const ActionConfig& config) {
  std::vector<FixAction> out;
  for (const ExprPtr& t : target_expressions(program, routine, p)) {
    if (!t->type.is_reference()) {
      for (const ExprPtr& d : derive_expressions(t)) {
        out.push_back(FixAction{ActionKind::kModification, t, make_assign(t, d)});
      }
      continue;
    }
    const int c = program.find_class(t->type.class_name);
    if (c < 0) continue;
    const ClassDecl& cls = program.classes[static_cast<std::size_t>(c)];
    for (std::size_t q = 0; q < cls.routines.size(); ++q) {
      const RoutineDecl& command = cls.routines[q];
      if (!command.is_command() || command.deferred) continue;
      if (t->kind == ExprKind::kCurrent && RoutineRef{c, static_cast<int>(q)} == routine) continue;
      for (auto& args :
           argument_sets(program, routine, command, clause, config.max_argument_sets)) {
        ExprPtr call = make_call(t, command.name, std::move(args));
        out.push_back(FixAction{ActionKind::kModification, t, make_call_stmt(call)});
      }
    }
  }
  return out;
}

std::vector<FixAction> expression_replacements(const Program& program, RoutineRef routine,
                                               int location, const ExprPtr& p) {
  const Stmt* stmt = find_stmt(program.routine(routine).body, location);
  if (!stmt) return {};
  const ExprSet at = sub_of_location(*stmt);
  std::vector<FixAction> out;
  for (bool boolean : {true, false}) {
    std::vector<ExprPtr> typed;
    for (const ExprPtr& e : sub_of_expression(p)) {
      if (boolean ? e->type.is_boolean() : e->type.is_integer()) typed.push_back(e);
    }
    for (const ExprPtr& e : largest(typed)) {
      if (!at.count(e)) continue;
      for (const ExprPtr& d : derive_expressions(e)) {
        Stmt s = replace_in_location(*stmt, e, d);
        s.fix_marker = false;
        out.push_back(FixAction{ActionKind::kReplacement, e, std::move(s)});
      }
    }
  }
  return out;
}

char schema_letter(FixSchema schema) {
  return static_cast<char>('a' + static_cast<int>(schema));
}

RoutineDecl patch_routine(const RoutineDecl& routine, int location,
                          const std::vector<Stmt>& replacement) {
  RoutineDecl out = routine;
  if (location == routine.exit_location()) {
    out.body.insert(out.body.end(), replacement.begin(), replacement.end());
    return out;
  }
  if (!replace_at(out.body, location, replacement)) {
    throw std::out_of_range("no statement at location " + std::to_string(location));
  }
  return out;
}

std::vector<FixCandidate> instantiate_candidates(const Program& program, RoutineRef routine,
                                                 const Component& component, const ExprPtr& p,
                                                 const std::vector<FixAction>& actions) {
  const RoutineDecl& decl = program.routine(routine);
  const bool at_exit = component.location == decl.exit_location();
  std::vector<Stmt> old;
  if (!at_exit) {
    const Stmt* s = find_stmt(decl.body, component.location);
    if (!s) return {};
    old.push_back(*s);
  }
  const ExprPtr fail = component.value ? p : complement(p);

  std::vector<std::pair<std::string, const FixAction*>> sorted;
  for (const FixAction& a : actions) sorted.emplace_back(print(a.snippet), &a);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<FixCandidate> out;
  auto emit = [&](FixSchema schema, const FixAction* action, std::vector<Stmt> replacement) {
    FixCandidate c;
    c.component = component;
    c.predicate = print(p);
    c.schema = schema;
    c.fail = fail;
    if (action) c.action = *action;
    c.routine = patch_routine(decl, component.location, replacement);
    out.push_back(std::move(c));
  };
  auto with_old = [&](std::vector<Stmt> front) {
    front.insert(front.end(), old.begin(), old.end());
    return front;
  };

  for (const auto& [_, a] : sorted) {
    if (a->kind == ActionKind::kModification) emit(FixSchema::kA, a, with_old({marked(a->snippet)}));
  }
  for (const auto& [_, a] : sorted) {
    emit(FixSchema::kB, a, with_old({marked(make_if(fail, {a->snippet}))}));
  }
  if (at_exit) return out;
  emit(FixSchema::kC, nullptr, {marked(make_if(complement(fail), old))});
  for (const auto& [_, a] : sorted) {
    emit(FixSchema::kD, a, {marked(make_if(fail, {a->snippet}, old))});
  }
  return out;
}

std::vector<FixCandidate> generate_candidates(const Program& program,
                                              const Localization& localization,
                                              const FixgenConfig& config, FixgenStats* stats) {
  FixgenStats local;
  FixgenStats& st = stats ? *stats : local;
  st = FixgenStats{};
  const RoutineRef routine = localization.fault.key.location.routine;
  const ExprPtr& clause = localization.fault.clause;
  std::vector<FixCandidate> out;
  std::set<std::string> seen;
  const int n = std::min<int>(config.max_components, static_cast<int>(localization.ranked.size()));
  for (int rank = 0; rank < n; ++rank) {
    const Component& comp = localization.ranked[static_cast<std::size_t>(rank)];
    ++st.components;
    const ExprPtr& p = localization.predicate(comp).expr;
    std::vector<FixAction> actions =
        expression_modifications(program, routine, p, clause, config.actions);
    for (FixAction& a : expression_replacements(program, routine, comp.location, p)) {
      actions.push_back(std::move(a));
    }
    for (FixCandidate& c : instantiate_candidates(program, routine, comp, p, actions)) {
      ++st.generated;
      try {
        check_routine(program, routine.class_index, c.routine);
      } catch (const CdlError&) {
        ++st.rejected;
        continue;
      }
      if (!seen.insert(unmarked_text(c.routine)).second) {
        ++st.duplicates;
        continue;
      }
      c.fault = localization.fault.key;
      c.component_rank = rank + 1;
      c.id = static_cast<int>(out.size()) + 1;
      out.push_back(std::move(c));
    }
  }
  return out;
}

Program apply_candidate(const Program& program, const FixCandidate& candidate) {
  Program out = program;
  out.routine(candidate.fault.location.routine) = candidate.routine;
  return out;
}

}  // namespace confix
