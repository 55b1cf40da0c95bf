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

#include "confix/syntax/subexpr.hpp"

namespace confix {

namespace {

void collect(const ExprPtr& e, bool with_current, ExprSet& out) {
  if (e->kind == ExprKind::kCurrent && !with_current) return;
  if (!out.insert(e).second) return;
  if (e->target) collect(e->target, with_current, out);
  for (const ExprPtr& op : e->operands) collect(op, with_current, out);
}

}  // namespace

ExprSet sub_of_expression(const ExprPtr& e) {
  ExprSet out;
  collect(e, false, out);
  return out;
}

ExprSet sub_with_current(const ExprPtr& e) {
  ExprSet out;
  collect(e, true, out);
  return out;
}

bool is_subexpression(const ExprPtr& a, const ExprPtr& b) {
  if (structurally_equal(a, b)) return true;
  if (b->target && is_subexpression(a, b->target)) return true;
  for (const ExprPtr& op : b->operands) {
    if (is_subexpression(a, op)) return true;
  }
  return false;
}

ExprSet sub_of_location(const Stmt& stmt) {
  ExprSet out;
  switch (stmt.kind) {
    case StmtKind::kIf:
    case StmtKind::kLoop:
    case StmtKind::kAssign:
      collect(stmt.expr, false, out);
      break;
    case StmtKind::kCall:
      for (const ExprPtr& a : stmt.expr->operands) collect(a, false, out);
      break;
    case StmtKind::kCreate:
      for (const ExprPtr& a : stmt.args) collect(a, false, out);
      break;
    case StmtKind::kCheck:
      break;
  }
  return out;
}

ExprPtr rewrite(const ExprPtr& e, const std::function<ExprPtr(const ExprPtr&)>& fn) {
  if (ExprPtr r = fn(e)) return r;
  ExprPtr target = e->target ? rewrite(e->target, fn) : nullptr;
  std::vector<ExprPtr> operands;
  bool changed = target != e->target;
  for (const ExprPtr& op : e->operands) {
    operands.push_back(rewrite(op, fn));
    changed = changed || operands.back() != op;
  }
  if (!changed) return e;
  auto copy = std::make_shared<Expr>(*e);
  copy->target = std::move(target);
  copy->operands = std::move(operands);
  return copy;
}

ExprPtr replace_subexpression(const ExprPtr& e, const ExprPtr& from, const ExprPtr& to) {
  return rewrite(e, [&](const ExprPtr& n) { return structurally_equal(n, from) ? to : nullptr; });
}

}  // namespace confix
