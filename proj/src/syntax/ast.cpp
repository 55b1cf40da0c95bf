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

#include "confix/syntax/ast.hpp"

#include <algorithm>

namespace confix {

std::string to_string(const Type& type) {
  switch (type.kind) {
    case TypeKind::kInteger:
      return "INTEGER";
    case TypeKind::kBoolean:
      return "BOOLEAN";
    case TypeKind::kReference:
      return type.class_name;
    case TypeKind::kVoid:
      return "NONE";
    case TypeKind::kNone:
      break;
  }
  return "<none>";
}

const char* to_string(BinaryOp op) {
  switch (op) {
    case BinaryOp::kPlus:
      return "+";
    case BinaryOp::kMinus:
      return "-";
    case BinaryOp::kEq:
      return "=";
    case BinaryOp::kNe:
      return "/=";
    case BinaryOp::kLt:
      return "<";
    case BinaryOp::kLe:
      return "<=";
    case BinaryOp::kGt:
      return ">";
    case BinaryOp::kGe:
      return ">=";
    case BinaryOp::kAnd:
      return "and";
    case BinaryOp::kOr:
      return "or";
  }
  return "?";
}

bool is_comparison(BinaryOp op) {
  switch (op) {
    case BinaryOp::kEq:
    case BinaryOp::kNe:
    case BinaryOp::kLt:
    case BinaryOp::kLe:
    case BinaryOp::kGt:
    case BinaryOp::kGe:
      return true;
    default:
      return false;
  }
}

ExprPtr make_int(std::int64_t value) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kIntLit;
  e->int_value = value;
  e->type = Type::Integer();
  return e;
}

ExprPtr make_bool(bool value) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kBoolLit;
  e->bool_value = value;
  e->type = Type::Boolean();
  return e;
}

ExprPtr make_void() {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kVoidLit;
  e->type = Type::VoidType();
  return e;
}

ExprPtr make_current(const std::string& class_name) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kCurrent;
  if (!class_name.empty()) e->type = Type::Reference(class_name);
  return e;
}

ExprPtr make_var(std::string name, VarKind kind, Type type) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kVar;
  e->name = std::move(name);
  e->var_kind = kind;
  e->type = std::move(type);
  return e;
}

ExprPtr make_call(ExprPtr target, std::string feature, std::vector<ExprPtr> args, Type type) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kCall;
  e->target = std::move(target);
  e->name = std::move(feature);
  e->operands = std::move(args);
  e->type = std::move(type);
  return e;
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kBinary;
  e->binary_op = op;
  switch (op) {
    case BinaryOp::kPlus:
    case BinaryOp::kMinus:
      e->type = Type::Integer();
      break;
    default:
      e->type = Type::Boolean();
  }
  e->operands = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr make_unary(UnaryOp op, ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kUnary;
  e->unary_op = op;
  e->type = op == UnaryOp::kNot ? Type::Boolean() : Type::Integer();
  e->operands = {std::move(operand)};
  return e;
}

namespace {

template <typename T>
int three_way(const T& a, const T& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

}  // namespace

int compare(const Expr& a, const Expr& b) {
  if (&a == &b) return 0;
  if (int c = three_way(static_cast<int>(a.kind), static_cast<int>(b.kind))) return c;
  switch (a.kind) {
    case ExprKind::kIntLit:
      return three_way(a.int_value, b.int_value);
    case ExprKind::kBoolLit:
      return three_way(a.bool_value, b.bool_value);
    case ExprKind::kVoidLit:
    case ExprKind::kCurrent:
      return 0;
    case ExprKind::kVar:
      if (int c = three_way(static_cast<int>(a.var_kind), static_cast<int>(b.var_kind))) return c;
      return a.name.compare(b.name) < 0 ? -1 : (a.name == b.name ? 0 : 1);
    case ExprKind::kCall: {
      if (int c = a.name.compare(b.name)) return c < 0 ? -1 : 1;
      const bool at = a.target != nullptr;
      const bool bt = b.target != nullptr;
      if (at != bt) return at ? 1 : -1;
      if (at) {
        if (int c = compare(*a.target, *b.target)) return c;
      }
      break;
    }
    case ExprKind::kBinary:
      if (int c = three_way(static_cast<int>(a.binary_op), static_cast<int>(b.binary_op))) return c;
      break;
    case ExprKind::kUnary:
      if (int c = three_way(static_cast<int>(a.unary_op), static_cast<int>(b.unary_op))) return c;
      break;
  }
  if (int c = three_way(a.operands.size(), b.operands.size())) return c;
  for (std::size_t i = 0; i < a.operands.size(); ++i) {
    if (int c = compare(*a.operands[i], *b.operands[i])) return c;
  }
  return 0;
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  return compare(*a, *b) == 0;
}

Stmt make_assign(ExprPtr target, ExprPtr value) {
  Stmt s;
  s.kind = StmtKind::kAssign;
  s.target = std::move(target);
  s.expr = std::move(value);
  return s;
}

Stmt make_call_stmt(ExprPtr call) {
  Stmt s;
  s.kind = StmtKind::kCall;
  s.expr = std::move(call);
  return s;
}

Stmt make_if(ExprPtr cond, std::vector<Stmt> then_part, std::vector<Stmt> else_part) {
  Stmt s;
  s.kind = StmtKind::kIf;
  s.expr = std::move(cond);
  s.then_part = std::move(then_part);
  s.else_part = std::move(else_part);
  return s;
}

const VarDecl* RoutineDecl::find_param(const std::string& n) const {
  auto it = std::find_if(params.begin(), params.end(), [&](const VarDecl& d) { return d.name == n; });
  return it == params.end() ? nullptr : &*it;
}

const VarDecl* RoutineDecl::find_local(const std::string& n) const {
  auto it = std::find_if(locals.begin(), locals.end(), [&](const VarDecl& d) { return d.name == n; });
  return it == locals.end() ? nullptr : &*it;
}

int ClassDecl::find_attribute(const std::string& n) const {
  for (std::size_t i = 0; i < attributes.size(); ++i) {
    if (attributes[i].name == n) return static_cast<int>(i);
  }
  return -1;
}

int ClassDecl::find_routine(const std::string& n) const {
  for (std::size_t i = 0; i < routines.size(); ++i) {
    if (routines[i].name == n) return static_cast<int>(i);
  }
  return -1;
}

bool ClassDecl::is_creation_procedure(const std::string& n) const {
  return std::find(creation_procedures.begin(), creation_procedures.end(), n) !=
         creation_procedures.end();
}

int Program::find_class(const std::string& n) const {
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].name == n) return static_cast<int>(i);
  }
  return -1;
}

std::optional<RoutineRef> Program::find_routine(const std::string& class_name,
                                                const std::string& routine_name) const {
  const int c = find_class(class_name);
  if (c < 0) return std::nullopt;
  const int r = classes[c].find_routine(routine_name);
  if (r < 0) return std::nullopt;
  return RoutineRef{c, r};
}

std::string Program::routine_name(RoutineRef ref) const {
  return classes.at(ref.class_index).name + "." + routine(ref).name;
}

std::optional<RoutineRef> Program::parse_routine_name(const std::string& qualified) const {
  const auto dot = qualified.find('.');
  if (dot == std::string::npos) return std::nullopt;
  return find_routine(qualified.substr(0, dot), qualified.substr(dot + 1));
}

namespace {

void number(std::vector<Stmt>& block, int& next) {
  for (Stmt& s : block) {
    s.location = next++;
    number(s.init_part, next);
    number(s.loop_part, next);
    number(s.then_part, next);
    number(s.else_part, next);
  }
}

}  // namespace

void assign_locations(RoutineDecl& routine) {
  int next = 1;
  number(routine.body, next);
  routine.location_count = next - 1;
}

const Stmt* find_stmt(const std::vector<Stmt>& body, int location) {
  const Stmt* found = nullptr;
  for_each_stmt(body, [&](const Stmt& s) {
    if (s.location == location) found = &s;
  });
  return found;
}

bool structurally_equal(const std::vector<Stmt>& a, const std::vector<Stmt>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!structurally_equal(a[i], b[i])) return false;
  }
  return true;
}

bool structurally_equal(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind) return false;
  if (!structurally_equal(a.target, b.target) || !structurally_equal(a.expr, b.expr)) return false;
  if (a.clause.tag != b.clause.tag || !structurally_equal(a.clause.expr, b.clause.expr)) return false;
  if (a.class_name != b.class_name || a.creation_procedure != b.creation_procedure) return false;
  if (a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!structurally_equal(a.args[i], b.args[i])) return false;
  }
  return structurally_equal(a.then_part, b.then_part) &&
         structurally_equal(a.else_part, b.else_part) &&
         structurally_equal(a.init_part, b.init_part) &&
         structurally_equal(a.loop_part, b.loop_part);
}

namespace {

bool same_decls(const std::vector<VarDecl>& a, const std::vector<VarDecl>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || !(a[i].type == b[i].type)) return false;
  }
  return true;
}

bool same_clauses(const std::vector<Clause>& a, const std::vector<Clause>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].tag != b[i].tag || !structurally_equal(a[i].expr, b[i].expr)) return false;
  }
  return true;
}

}  // namespace

bool structurally_equal(const RoutineDecl& a, const RoutineDecl& b) {
  return a.name == b.name && same_decls(a.params, b.params) && a.result_type == b.result_type &&
         same_clauses(a.require, b.require) && same_clauses(a.ensure, b.ensure) &&
         same_decls(a.locals, b.locals) && a.deferred == b.deferred &&
         structurally_equal(a.body, b.body);
}

bool structurally_equal(const Program& a, const Program& b) {
  if (a.classes.size() != b.classes.size()) return false;
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    const ClassDecl& x = a.classes[i];
    const ClassDecl& y = b.classes[i];
    if (x.name != y.name || x.creation_procedures != y.creation_procedures) return false;
    if (x.attributes.size() != y.attributes.size() || x.routines.size() != y.routines.size()) {
      return false;
    }
    for (std::size_t k = 0; k < x.attributes.size(); ++k) {
      if (x.attributes[k].name != y.attributes[k].name ||
          !(x.attributes[k].type == y.attributes[k].type)) {
        return false;
      }
    }
    for (std::size_t k = 0; k < x.routines.size(); ++k) {
      if (!structurally_equal(x.routines[k], y.routines[k])) return false;
    }
  }
  return true;
}

}  // namespace confix
