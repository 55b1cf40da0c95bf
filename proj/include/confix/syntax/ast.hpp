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

#ifndef CONFIX_SYNTAX_AST_HPP_
#define CONFIX_SYNTAX_AST_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace confix {

struct SourcePos {
  int line = 0;
  int column = 0;
};

enum class TypeKind { kNone, kInteger, kBoolean, kReference, kVoid };

// kNone is "no value" (commands, statements); kVoid is the type of the Void
// literal, which conforms to every reference type.
struct Type {
  TypeKind kind = TypeKind::kNone;
  std::string class_name;

  static Type Integer() { return {TypeKind::kInteger, {}}; }
  static Type Boolean() { return {TypeKind::kBoolean, {}}; }
  static Type Reference(std::string name) {
    return {TypeKind::kReference, std::move(name)};
  }
  static Type VoidType() { return {TypeKind::kVoid, {}}; }

  bool is_integer() const { return kind == TypeKind::kInteger; }
  bool is_boolean() const { return kind == TypeKind::kBoolean; }
  bool is_reference() const { return kind == TypeKind::kReference; }
  bool is_none() const { return kind == TypeKind::kNone; }

  friend bool operator==(const Type&, const Type&) = default;
};

std::string to_string(const Type& type);

enum class ExprKind { kIntLit, kBoolLit, kVoidLit, kCurrent, kVar, kCall, kBinary, kUnary };
enum class VarKind { kLocal, kArgument, kResult };
enum class BinaryOp { kPlus, kMinus, kEq, kNe, kLt, kLe, kGt, kGe, kAnd, kOr };
enum class UnaryOp { kNot, kNeg };

const char* to_string(BinaryOp op);
bool is_comparison(BinaryOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression node. Infix and prefix forms are kept as their own
// node kinds but behave as query calls for sub-expression purposes: the
// operands play the role of target and argument.
//
// A kCall with a null target is an unresolved identifier straight out of the
// parser; the checker rewrites it into a kVar or a kCall on Current.
struct Expr {
  ExprKind kind = ExprKind::kIntLit;
  Type type;
  std::int64_t int_value = 0;
  bool bool_value = false;
  std::string name;
  VarKind var_kind = VarKind::kLocal;
  BinaryOp binary_op = BinaryOp::kPlus;
  UnaryOp unary_op = UnaryOp::kNot;
  ExprPtr target;
  std::vector<ExprPtr> operands;  // call arguments, or binary/unary operands
  SourcePos pos;

  bool is_constant() const {
    return kind == ExprKind::kIntLit || kind == ExprKind::kBoolLit ||
           kind == ExprKind::kVoidLit;
  }
  const ExprPtr& lhs() const { return operands[0]; }
  const ExprPtr& rhs() const { return operands[1]; }
};

ExprPtr make_int(std::int64_t value);
ExprPtr make_bool(bool value);
ExprPtr make_void();
ExprPtr make_current(const std::string& class_name = {});
ExprPtr make_var(std::string name, VarKind kind, Type type = {});
ExprPtr make_call(ExprPtr target, std::string feature, std::vector<ExprPtr> args,
                  Type type = {});
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_unary(UnaryOp op, ExprPtr operand);

// Structural order over expressions: ignores types and source positions.
int compare(const Expr& a, const Expr& b);
bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

struct ExprLess {
  bool operator()(const ExprPtr& a, const ExprPtr& b) const {
    return compare(*a, *b) < 0;
  }
};

struct Clause {
  std::string tag;
  ExprPtr expr;
};

enum class StmtKind { kAssign, kCall, kIf, kLoop, kCheck, kCreate };

// Statements are value types so a routine body can be copied and patched.
// `location` is the pre-order index of the statement inside its routine; a
// compound statement is a single location labeling its condition.
struct Stmt {
  StmtKind kind = StmtKind::kCall;
  int location = 0;
  ExprPtr target;  // assign / create target
  ExprPtr expr;    // assign rhs, call expression, if / loop condition
  std::vector<Stmt> then_part;
  std::vector<Stmt> else_part;
  std::vector<Stmt> init_part;
  std::vector<Stmt> loop_part;
  Clause clause;  // check
  std::string class_name;
  std::string creation_procedure;
  std::vector<ExprPtr> args;  // create arguments
  bool fix_marker = false;    // printing only
  SourcePos pos;
};

Stmt make_assign(ExprPtr target, ExprPtr value);
Stmt make_call_stmt(ExprPtr call);
Stmt make_if(ExprPtr cond, std::vector<Stmt> then_part, std::vector<Stmt> else_part = {});

struct VarDecl {
  std::string name;
  Type type;
};

struct RoutineDecl {
  std::string name;
  std::vector<VarDecl> params;
  std::optional<Type> result_type;
  std::vector<Clause> require;
  std::vector<Clause> ensure;
  std::vector<VarDecl> locals;
  std::vector<Stmt> body;
  bool deferred = false;
  int location_count = 0;

  bool is_query() const { return result_type.has_value(); }
  bool is_command() const { return !result_type.has_value(); }
  // Synthetic location after the body, where postconditions are checked.
  int exit_location() const { return location_count + 1; }
  const VarDecl* find_param(const std::string& n) const;
  const VarDecl* find_local(const std::string& n) const;
};

struct AttributeDecl {
  std::string name;
  Type type;
};

struct ClassDecl {
  std::string name;
  std::vector<std::string> creation_procedures;
  std::vector<AttributeDecl> attributes;
  std::vector<RoutineDecl> routines;

  int find_attribute(const std::string& n) const;  // -1 if absent
  int find_routine(const std::string& n) const;    // -1 if absent
  bool is_creation_procedure(const std::string& n) const;
};

struct RoutineRef {
  int class_index = -1;
  int routine_index = -1;
  friend auto operator<=>(const RoutineRef&, const RoutineRef&) = default;
};

struct Location {
  RoutineRef routine;
  int index = 0;
  friend auto operator<=>(const Location&, const Location&) = default;
};

struct Program {
  std::vector<ClassDecl> classes;

  int find_class(const std::string& n) const;  // -1 if absent
  const ClassDecl& class_at(int index) const { return classes.at(index); }
  const RoutineDecl& routine(RoutineRef ref) const {
    return classes.at(ref.class_index).routines.at(ref.routine_index);
  }
  RoutineDecl& routine(RoutineRef ref) {
    return classes.at(ref.class_index).routines.at(ref.routine_index);
  }
  std::optional<RoutineRef> find_routine(const std::string& class_name,
                                         const std::string& routine_name) const;
  // "CLASS.routine"
  std::string routine_name(RoutineRef ref) const;
  std::optional<RoutineRef> parse_routine_name(const std::string& qualified) const;
};

// Numbers every statement of the body in pre-order, starting at 1.
void assign_locations(RoutineDecl& routine);

const Stmt* find_stmt(const std::vector<Stmt>& body, int location);

// Calls `fn` on every statement in pre-order (loop init before loop body).
template <typename Fn>
void for_each_stmt(const std::vector<Stmt>& body, Fn&& fn) {
  for (const Stmt& stmt : body) {
    fn(stmt);
    for (const auto* part : {&stmt.init_part, &stmt.loop_part, &stmt.then_part, &stmt.else_part}) {
      for_each_stmt(*part, fn);
    }
  }
}

bool structurally_equal(const Stmt& a, const Stmt& b);
bool structurally_equal(const std::vector<Stmt>& a, const std::vector<Stmt>& b);
bool structurally_equal(const RoutineDecl& a, const RoutineDecl& b);
bool structurally_equal(const Program& a, const Program& b);

}  // namespace confix

#endif  // CONFIX_SYNTAX_AST_HPP_
