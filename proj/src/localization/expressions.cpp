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

#include "confix/localization/expressions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "confix/localization/scores.hpp"

namespace confix {

ExprPtr instantiate_clause(const Program& program, const Violation& violation) {
  if (!violation.clause) return nullptr;
  if (violation.kind != ViolationKind::kPrecondition || !violation.call_site) {
    return violation.clause;
  }
  const RoutineDecl& callee = program.routine(violation.owner);
  const ExprPtr& site = violation.call_site;
  return rewrite(violation.clause, [&](const ExprPtr& e) -> ExprPtr {
    if (e->kind == ExprKind::kCurrent) return site->target;
    if (e->kind == ExprKind::kVar && e->var_kind == VarKind::kArgument) {
      for (std::size_t i = 0; i < callee.params.size(); ++i) {
        if (callee.params[i].name == e->name && i < site->operands.size()) {
          return site->operands[i];
        }
      }
    }
    return nullptr;
  });
}

FaultContext make_fault_context(const Program& program, const Violation& violation) {
  if (violation.kind == ViolationKind::kVoidCall || !violation.clause) {
    throw std::invalid_argument("calls on Void have no violated clause");
  }
  return FaultContext{fault_key_of(program, violation), violation.kind,
                      instantiate_clause(program, violation)};
}

std::optional<FaultContext> find_fault_context(const Program& program, const FaultKey& key,
                                               const std::vector<TestCase>& failing,
                                               const RunOptions& options) {
  RunOptions quiet = options;
  quiet.record_steps = false;
  quiet.snapshots = false;
  for (const TestCase& t : failing) {
    RunResult r = run_test(program, t, quiet);
    if (r.verdict != Verdict::kFail || !r.violation) continue;
    if (fault_key_of(program, *r.violation) != key) continue;
    if (r.violation->kind == ViolationKind::kVoidCall) return std::nullopt;
    return make_fault_context(program, *r.violation);
  }
  return std::nullopt;
}

namespace {

void add_valued(const ExprPtr& e, ExprSet& out) {
  if (!e) return;
  for (const ExprPtr& s : sub_of_expression(e)) {
    if (!s->is_constant() && !s->type.is_none()) out.insert(s);
  }
}

}  // namespace

ExpressionSet harvest_expressions(const Program& program, RoutineRef routine,
                                  const ExprPtr& clause, int cap) {
  ExpressionSet out;
  for_each_stmt(program.routine(routine).body, [&](const Stmt& s) {
    switch (s.kind) {
      case StmtKind::kAssign:
        add_valued(s.target, out.base);
        add_valued(s.expr, out.base);
        break;
      case StmtKind::kCall:
      case StmtKind::kIf:
      case StmtKind::kLoop:
        add_valued(s.expr, out.base);
        break;
      case StmtKind::kCreate:
        add_valued(s.target, out.base);
        for (const ExprPtr& a : s.args) add_valued(a, out.base);
        break;
      case StmtKind::kCheck:
        add_valued(s.clause.expr, out.base);
        break;
    }
  });
  add_valued(clause, out.base);

  ExprSet all = out.base;
  for (const ExprPtr& e : out.base) {
    if (!e->type.is_reference()) continue;
    const int c = program.find_class(e->type.class_name);
    if (c < 0) continue;
    const ClassDecl& cls = program.classes[c];
    for (const AttributeDecl& a : cls.attributes) all.insert(make_call(e, a.name, {}, a.type));
    for (const RoutineDecl& r : cls.routines) {
      if (r.is_query() && r.params.empty()) all.insert(make_call(e, r.name, {}, *r.result_type));
    }
  }
  out.unfolded.assign(all.begin(), all.end());
  if (cap >= 0 && static_cast<int>(out.unfolded.size()) > cap && clause) {
    std::vector<std::pair<int, std::size_t>> order;
    for (std::size_t i = 0; i < out.unfolded.size(); ++i) {
      order.emplace_back(-expression_proximity(out.unfolded[i], clause), i);
    }
    std::stable_sort(order.begin(), order.end());
    order.resize(static_cast<std::size_t>(cap));
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    std::vector<ExprPtr> kept;
    for (const auto& [_, i] : order) kept.push_back(out.unfolded[i]);
    out.unfolded = std::move(kept);
  } else if (cap >= 0 && static_cast<int>(out.unfolded.size()) > cap) {
    out.unfolded.resize(static_cast<std::size_t>(cap));
  }
  return out;
}

namespace {

BinaryOp negated(BinaryOp op) {
  switch (op) {
    case BinaryOp::kEq: return BinaryOp::kNe;
    case BinaryOp::kNe: return BinaryOp::kEq;
    case BinaryOp::kLt: return BinaryOp::kGe;
    case BinaryOp::kGe: return BinaryOp::kLt;
    case BinaryOp::kLe: return BinaryOp::kGt;
    case BinaryOp::kGt: return BinaryOp::kLe;
    default: return op;
  }
}

}  // namespace

ExprPtr complement(const ExprPtr& p) {
  if (p->kind == ExprKind::kUnary && p->unary_op == UnaryOp::kNot) return p->operands[0];
  if (p->kind == ExprKind::kBinary && is_comparison(p->binary_op)) {
    return make_binary(negated(p->binary_op), p->lhs(), p->rhs());
  }
  return make_unary(UnaryOp::kNot, p);
}

PredicateSet build_predicates(const ExpressionSet& expressions, const ExprPtr& clause) {
  PredicateSet out;
  std::map<ExprPtr, int, ExprLess> operand_index;
  auto operand = [&](const ExprPtr& e) {
    auto [it, fresh] = operand_index.emplace(e, static_cast<int>(out.operands.size()));
    if (fresh) out.operands.push_back(e);
    return it->second;
  };
  ExprSet seen;
  auto add = [&](Predicate p) {
    if (seen.insert(p.expr).second) out.predicates.push_back(std::move(p));
  };

  std::vector<ExprPtr> ints;
  for (const ExprPtr& e : expressions.unfolded) {
    if (e->type.is_boolean()) {
      add(Predicate{e, PredicateForm::kBoolean, operand(e)});
    } else if (e->type.is_reference()) {
      add(Predicate{make_binary(BinaryOp::kEq, e, make_void()), PredicateForm::kVoidness,
                    operand(e), -1, BinaryOp::kEq});
    } else if (e->type.is_integer()) {
      ints.push_back(e);
    }
  }

  std::vector<ExprPtr> others = ints;
  ExprSet literals{make_int(0)};
  if (clause) {
    for (const ExprPtr& s : sub_of_expression(clause)) {
      if (s->kind == ExprKind::kIntLit) literals.insert(s);
    }
  }
  others.insert(others.end(), literals.begin(), literals.end());
  for (const ExprPtr& e : ints) {
    for (const ExprPtr& f : others) {
      if (structurally_equal(e, f)) continue;
      for (BinaryOp op : {BinaryOp::kEq, BinaryOp::kLt, BinaryOp::kLe}) {
        add(Predicate{make_binary(op, e, f), PredicateForm::kComparison, operand(e), operand(f),
                      op});
      }
    }
  }

  const std::size_t n = out.predicates.size();
  for (std::size_t i = 0; i < n; ++i) {
    Predicate c = out.predicates[i];
    c.expr = complement(c.expr);
    if (c.form == PredicateForm::kBoolean) {
      c.negate = !c.negate;
    } else {
      c.op = negated(c.op);
    }
    add(std::move(c));
  }
  return out;
}

std::optional<bool> evaluate_predicate(const Predicate& p,
                                       const std::vector<std::optional<Value>>& operands) {
  const auto& a = operands.at(static_cast<std::size_t>(p.lhs));
  if (!a) return std::nullopt;
  switch (p.form) {
    case PredicateForm::kBoolean:
      if (a->kind != ValueKind::kBool) return std::nullopt;
      return a->bool_value != p.negate;
    case PredicateForm::kVoidness:
      if (a->kind != ValueKind::kRef && a->kind != ValueKind::kVoid) return std::nullopt;
      return a->is_void() == (p.op == BinaryOp::kEq);
    case PredicateForm::kComparison: {
      const auto& b = operands.at(static_cast<std::size_t>(p.rhs));
      if (!b || a->kind != ValueKind::kInt || b->kind != ValueKind::kInt) return std::nullopt;
      const std::int64_t x = a->int_value;
      const std::int64_t y = b->int_value;
      switch (p.op) {
        case BinaryOp::kEq: return x == y;
        case BinaryOp::kNe: return x != y;
        case BinaryOp::kLt: return x < y;
        case BinaryOp::kLe: return x <= y;
        case BinaryOp::kGt: return x > y;
        case BinaryOp::kGe: return x >= y;
        default: return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

}  // namespace confix
