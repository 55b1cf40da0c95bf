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

#include "checker.hpp"

#include <functional>
#include <set>
#include <string>

#include "confix/syntax/parser.hpp"

namespace confix::detail {

namespace {

[[noreturn]] void type_error(SourcePos pos, const std::string& message) {
  throw CdlError({{DiagnosticKind::kType, pos, message}});
}

[[noreturn]] void duplicate(SourcePos pos, const std::string& message) {
  throw CdlError({{DiagnosticKind::kDuplicate, pos, message}});
}

bool conforms(const Type& source, const Type& target) {
  if (source == target) return true;
  return target.is_reference() && source.kind == TypeKind::kVoid;
}

bool comparable(const Type& a, const Type& b) {
  const bool a_ref = a.is_reference() || a.kind == TypeKind::kVoid;
  const bool b_ref = b.is_reference() || b.kind == TypeKind::kVoid;
  if (a_ref && b_ref) return true;
  return a == b && !a.is_none();
}

ExprPtr retyped(const Expr& node, std::vector<ExprPtr> operands, ExprPtr target, Type type) {
  auto e = std::make_shared<Expr>(node);
  e->operands = std::move(operands);
  e->target = std::move(target);
  e->type = std::move(type);
  return e;
}

const ClassDecl& class_of(const Scope& scope, const Type& type, SourcePos pos) {
  if (!type.is_reference()) type_error(pos, "feature call on non-reference type " + to_string(type));
  const int c = scope.program.find_class(type.class_name);
  if (c < 0) type_error(pos, "unknown class " + type.class_name);
  return scope.program.classes[c];
}

std::vector<ExprPtr> check_args(const RoutineDecl& callee, const std::vector<ExprPtr>& args,
                                const Scope& scope, SourcePos pos) {
  if (args.size() != callee.params.size()) {
    type_error(pos, "'" + callee.name + "' expects " + std::to_string(callee.params.size()) +
                        " argument(s), got " + std::to_string(args.size()));
  }
  std::vector<ExprPtr> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    ExprPtr a = resolve(args[i], scope);
    if (!conforms(a->type, callee.params[i].type)) {
      type_error(args[i]->pos, "argument " + std::to_string(i + 1) + " of '" + callee.name +
                                   "' has type " + to_string(a->type) + ", expected " +
                                   to_string(callee.params[i].type));
    }
    out.push_back(std::move(a));
  }
  return out;
}

// Resolves feature `e.name` on an object of class `cls`.
ExprPtr resolve_feature(const Expr& e, ExprPtr target, const ClassDecl& cls, const Scope& scope) {
  const int attr = cls.find_attribute(e.name);
  if (attr >= 0) {
    if (!e.operands.empty()) type_error(e.pos, "attribute '" + e.name + "' takes no arguments");
    return retyped(e, {}, std::move(target), cls.attributes[attr].type);
  }
  const int r = cls.find_routine(e.name);
  if (r < 0) type_error(e.pos, "unknown feature '" + e.name + "' in class " + cls.name);
  const RoutineDecl& callee = cls.routines[r];
  if (!callee.is_query()) type_error(e.pos, "command '" + e.name + "' used as an expression");
  return retyped(e, check_args(callee, e.operands, scope, e.pos), std::move(target),
                 *callee.result_type);
}

ExprPtr current_of(const Scope& scope) {
  return make_current(scope.program.classes[scope.class_index].name);
}

ExprPtr resolve_var(const Expr& e, const Scope& scope) {
  const RoutineDecl* r = scope.routine;
  if (e.var_kind == VarKind::kResult) {
    if (r == nullptr || !r->is_query()) type_error(e.pos, "'Result' used outside a query");
    if (scope.mode == Mode::kPrecondition) type_error(e.pos, "'Result' used in a precondition");
    return retyped(e, {}, nullptr, *r->result_type);
  }
  if (r != nullptr) {
    if (const VarDecl* p = r->find_param(e.name)) {
      return make_var(e.name, VarKind::kArgument, p->type);
    }
    if (scope.mode == Mode::kBody) {
      if (const VarDecl* l = r->find_local(e.name)) return make_var(e.name, VarKind::kLocal, l->type);
    }
  }
  type_error(e.pos, "undeclared identifier '" + e.name + "'");
}

}  // namespace

ExprPtr resolve(const ExprPtr& expr, const Scope& scope) {
  const Expr& e = *expr;
  switch (e.kind) {
    case ExprKind::kIntLit:
    case ExprKind::kBoolLit:
    case ExprKind::kVoidLit:
      return expr;
    case ExprKind::kCurrent:
      return current_of(scope);
    case ExprKind::kVar:
      return resolve_var(e, scope);
    case ExprKind::kCall: {
      if (e.target == nullptr) {
        // Unqualified: argument, local, then feature of Current.
        if (e.operands.empty() && scope.routine != nullptr) {
          const RoutineDecl& r = *scope.routine;
          if (const VarDecl* p = r.find_param(e.name)) {
            return make_var(e.name, VarKind::kArgument, p->type);
          }
          if (const VarDecl* l = r.find_local(e.name)) {
            if (scope.mode != Mode::kBody) {
              type_error(e.pos, "local '" + e.name + "' used in a contract");
            }
            return make_var(e.name, VarKind::kLocal, l->type);
          }
        }
        const ClassDecl& cls = scope.program.classes[scope.class_index];
        if (cls.find_attribute(e.name) < 0 && cls.find_routine(e.name) < 0) {
          type_error(e.pos, "undeclared identifier '" + e.name + "'");
        }
        return resolve_feature(e, current_of(scope), cls, scope);
      }
      ExprPtr target = resolve(e.target, scope);
      const ClassDecl& cls = class_of(scope, target->type, e.pos);
      return resolve_feature(e, std::move(target), cls, scope);
    }
    case ExprKind::kUnary: {
      ExprPtr operand = resolve(e.operands[0], scope);
      if (e.unary_op == UnaryOp::kNot) {
        if (!operand->type.is_boolean()) type_error(e.pos, "'not' needs a BOOLEAN operand");
        return retyped(e, {operand}, nullptr, Type::Boolean());
      }
      if (!operand->type.is_integer()) type_error(e.pos, "unary '-' needs an INTEGER operand");
      return retyped(e, {operand}, nullptr, Type::Integer());
    }
    case ExprKind::kBinary: {
      ExprPtr lhs = resolve(e.operands[0], scope);
      ExprPtr rhs = resolve(e.operands[1], scope);
      const std::string op = to_string(e.binary_op);
      switch (e.binary_op) {
        case BinaryOp::kPlus:
        case BinaryOp::kMinus:
          if (!lhs->type.is_integer() || !rhs->type.is_integer()) {
            type_error(e.pos, "'" + op + "' needs INTEGER operands");
          }
          return retyped(e, {lhs, rhs}, nullptr, Type::Integer());
        case BinaryOp::kAnd:
        case BinaryOp::kOr:
          if (!lhs->type.is_boolean() || !rhs->type.is_boolean()) {
            type_error(e.pos, "'" + op + "' needs BOOLEAN operands");
          }
          return retyped(e, {lhs, rhs}, nullptr, Type::Boolean());
        case BinaryOp::kEq:
        case BinaryOp::kNe:
          if (!comparable(lhs->type, rhs->type)) {
            type_error(e.pos, "cannot compare " + to_string(lhs->type) + " with " +
                                  to_string(rhs->type));
          }
          return retyped(e, {lhs, rhs}, nullptr, Type::Boolean());
        default:
          if (!lhs->type.is_integer() || !rhs->type.is_integer()) {
            type_error(e.pos, "'" + op + "' needs INTEGER operands");
          }
          return retyped(e, {lhs, rhs}, nullptr, Type::Boolean());
      }
    }
  }
  type_error(e.pos, "unsupported expression");
}

namespace {

ExprPtr check_assignable(const ExprPtr& raw, const Scope& scope) {
  ExprPtr t = resolve(raw, scope);
  if (t->kind == ExprKind::kVar) {
    if (t->var_kind == VarKind::kArgument) {
      type_error(raw->pos, "argument '" + t->name + "' is read-only");
    }
    return t;
  }
  if (t->kind == ExprKind::kCall && t->target && t->target->kind == ExprKind::kCurrent &&
      scope.program.classes[scope.class_index].find_attribute(t->name) >= 0) {
    return t;
  }
  type_error(raw->pos, "'" + raw->name + "' is not assignable");
}

ExprPtr check_condition(const ExprPtr& raw, const Scope& scope) {
  ExprPtr c = resolve(raw, scope);
  if (!c->type.is_boolean()) type_error(raw->pos, "condition must be BOOLEAN");
  return c;
}

void check_block(std::vector<Stmt>& block, const Scope& scope) {
  for (Stmt& s : block) check_stmt(s, scope);
}

}  // namespace

void check_stmt(Stmt& stmt, const Scope& scope) {
  switch (stmt.kind) {
    case StmtKind::kAssign: {
      stmt.target = check_assignable(stmt.target, scope);
      stmt.expr = resolve(stmt.expr, scope);
      if (!conforms(stmt.expr->type, stmt.target->type)) {
        type_error(stmt.pos, "cannot assign " + to_string(stmt.expr->type) + " to " +
                                 to_string(stmt.target->type));
      }
      break;
    }
    case StmtKind::kCall: {
      const Expr& call = *stmt.expr;
      if (call.kind != ExprKind::kCall) type_error(stmt.pos, "expected a command call");
      ExprPtr target = call.target ? resolve(call.target, scope) : current_of(scope);
      if (call.target == nullptr && scope.routine != nullptr &&
          (scope.routine->find_param(call.name) || scope.routine->find_local(call.name))) {
        type_error(stmt.pos, "'" + call.name + "' is not a command");
      }
      const ClassDecl& cls = class_of(scope, target->type, stmt.pos);
      const int r = cls.find_routine(call.name);
      if (r < 0) type_error(call.pos, "unknown command '" + call.name + "' in class " + cls.name);
      const RoutineDecl& callee = cls.routines[r];
      if (!callee.is_command()) type_error(call.pos, "query '" + call.name + "' used as an instruction");
      stmt.expr = retyped(call, check_args(callee, call.operands, scope, call.pos), target, Type{});
      break;
    }
    case StmtKind::kIf:
      stmt.expr = check_condition(stmt.expr, scope);
      check_block(stmt.then_part, scope);
      check_block(stmt.else_part, scope);
      break;
    case StmtKind::kLoop:
      check_block(stmt.init_part, scope);
      stmt.expr = check_condition(stmt.expr, scope);
      check_block(stmt.loop_part, scope);
      break;
    case StmtKind::kCheck:
      stmt.clause.expr = check_condition(stmt.clause.expr, scope);
      break;
    case StmtKind::kCreate: {
      stmt.target = check_assignable(stmt.target, scope);
      const ClassDecl& cls = class_of(scope, stmt.target->type, stmt.pos);
      stmt.class_name = cls.name;
      if (!cls.is_creation_procedure(stmt.creation_procedure)) {
        type_error(stmt.pos, "'" + stmt.creation_procedure + "' is not a creation procedure of " +
                                 cls.name);
      }
      const RoutineDecl& proc = cls.routines[cls.find_routine(stmt.creation_procedure)];
      stmt.args = check_args(proc, stmt.args, scope, stmt.pos);
      break;
    }
  }
}

namespace {

void check_type_exists(const Program& program, const Type& type) {
  if (type.is_reference() && program.find_class(type.class_name) < 0) {
    type_error({}, "unknown type " + type.class_name);
  }
}

void check_clauses(std::vector<Clause>& clauses, const Scope& scope, const std::string& prefix) {
  std::set<std::string> tags;
  int n = 0;
  for (Clause& c : clauses) {
    ++n;
    if (c.tag.empty()) c.tag = prefix + "_" + std::to_string(n);
    if (!tags.insert(c.tag).second) duplicate(c.expr->pos, "clause tag '" + c.tag + "'");
    c.expr = check_condition(c.expr, scope);
  }
}

}  // namespace

void check_routine_body(const Program& program, int class_index, RoutineDecl& routine) {
  const ClassDecl& cls = program.classes[class_index];
  std::set<std::string> names;
  for (const auto* decls : {&routine.params, &routine.locals}) {
    for (const VarDecl& d : *decls) {
      check_type_exists(program, d.type);
      if (!names.insert(d.name).second) duplicate({}, "'" + d.name + "' in routine " + routine.name);
      if (cls.find_attribute(d.name) >= 0 || cls.find_routine(d.name) >= 0) {
        duplicate({}, "'" + d.name + "' in routine " + routine.name + " shadows a feature");
      }
    }
  }
  if (routine.result_type) check_type_exists(program, *routine.result_type);
  check_clauses(routine.require, Scope{program, class_index, &routine, Mode::kPrecondition},
                "require");
  check_block(routine.body, Scope{program, class_index, &routine, Mode::kBody});
  check_clauses(routine.ensure, Scope{program, class_index, &routine, Mode::kPostcondition},
                "ensure");
  int k = 0;
  std::function<void(std::vector<Stmt>&)> tag_checks = [&](std::vector<Stmt>& block) {
    for (Stmt& s : block) {
      if (s.kind == StmtKind::kCheck && s.clause.tag.empty()) {
        s.clause.tag = "check_" + std::to_string(++k);
      }
      for (auto* part : {&s.init_part, &s.loop_part, &s.then_part, &s.else_part}) tag_checks(*part);
    }
  };
  tag_checks(routine.body);
}

void check_program(Program& program) {
  std::set<std::string> class_names;
  for (const ClassDecl& cls : program.classes) {
    if (cls.name == "INTEGER" || cls.name == "BOOLEAN") {
      duplicate({}, "class " + cls.name + " clashes with a primitive type");
    }
    if (!class_names.insert(cls.name).second) duplicate({}, "class " + cls.name);
  }
  for (std::size_t c = 0; c < program.classes.size(); ++c) {
    ClassDecl& cls = program.classes[c];
    std::set<std::string> features;
    for (const AttributeDecl& a : cls.attributes) {
      check_type_exists(program, a.type);
      if (!features.insert(a.name).second) duplicate({}, "feature '" + a.name + "' in " + cls.name);
    }
    for (const RoutineDecl& r : cls.routines) {
      if (!features.insert(r.name).second) duplicate({}, "feature '" + r.name + "' in " + cls.name);
    }
    for (const std::string& p : cls.creation_procedures) {
      const int r = cls.find_routine(p);
      if (r < 0 || !cls.routines[r].is_command()) {
        type_error({}, "creation procedure '" + p + "' of " + cls.name + " is not a command");
      }
    }
  }
  for (std::size_t c = 0; c < program.classes.size(); ++c) {
    for (RoutineDecl& r : program.classes[c].routines) {
      check_routine_body(program, static_cast<int>(c), r);
      assign_locations(r);
    }
  }
}

}  // namespace confix::detail
