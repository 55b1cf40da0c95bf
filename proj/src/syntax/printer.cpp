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

#include "confix/syntax/printer.hpp"

#include <sstream>

namespace confix {

namespace {

constexpr int kOrPrec = 1;
constexpr int kAndPrec = 2;
constexpr int kCmpPrec = 3;
constexpr int kAddPrec = 4;
constexpr int kUnaryPrec = 5;
constexpr int kPostfixPrec = 6;
constexpr int kAtomPrec = 7;

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::kOr:
      return kOrPrec;
    case BinaryOp::kAnd:
      return kAndPrec;
    case BinaryOp::kPlus:
    case BinaryOp::kMinus:
      return kAddPrec;
    default:
      return kCmpPrec;
  }
}

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kBinary:
      return precedence(e.binary_op);
    case ExprKind::kUnary:
      return kUnaryPrec;
    case ExprKind::kIntLit:
      // A negative literal must not follow another '-' ("--" opens a comment).
      return e.int_value < 0 ? kUnaryPrec : kAtomPrec;
    case ExprKind::kCall:
      return e.target && e.target->kind != ExprKind::kCurrent ? kPostfixPrec : kAtomPrec;
    default:
      return kAtomPrec;
  }
}

std::string expr(const Expr& e);

std::string wrapped(const Expr& e, bool parens) {
  return parens ? "(" + expr(e) + ")" : expr(e);
}

std::string args(const std::vector<ExprPtr>& a) {
  if (a.empty()) return {};
  std::string out = " (";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ", ";
    out += expr(*a[i]);
  }
  return out + ")";
}

std::string expr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kIntLit:
      return std::to_string(e.int_value);
    case ExprKind::kBoolLit:
      return e.bool_value ? "True" : "False";
    case ExprKind::kVoidLit:
      return "Void";
    case ExprKind::kCurrent:
      return "Current";
    case ExprKind::kVar:
      return e.var_kind == VarKind::kResult ? "Result" : e.name;
    case ExprKind::kCall: {
      std::string head;
      if (e.target && e.target->kind != ExprKind::kCurrent) {
        head = wrapped(*e.target, precedence(*e.target) < kPostfixPrec) + ".";
      }
      return head + e.name + args(e.operands);
    }
    case ExprKind::kUnary: {
      const Expr& operand = *e.operands[0];
      const bool parens = precedence(operand) <= kUnaryPrec;
      if (e.unary_op == UnaryOp::kNot) return "not " + wrapped(operand, parens);
      return "-" + wrapped(operand, parens || operand.kind == ExprKind::kIntLit);
    }
    case ExprKind::kBinary: {
      const int p = precedence(e.binary_op);
      const Expr& l = *e.operands[0];
      const Expr& r = *e.operands[1];
      // Comparisons do not chain, so both sides need grouping at equal level.
      const bool lparens = p == kCmpPrec ? precedence(l) <= p : precedence(l) < p;
      const bool rparens = precedence(r) <= p || (precedence(r) == kUnaryPrec && p == kAddPrec);
      return wrapped(l, lparens) + " " + to_string(e.binary_op) + " " + wrapped(r, rparens);
    }
  }
  return "?";
}

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent) * 2, ' '); }

std::string clause_text(const Clause& c) {
  return c.tag.empty() ? print(c.expr) : c.tag + ": " + print(c.expr);
}

void stmt(std::ostringstream& out, const Stmt& s, int indent, bool elseif = false);

void block(std::ostringstream& out, const std::vector<Stmt>& b, int indent) {
  for (const Stmt& s : b) stmt(out, s, indent);
}

void stmt(std::ostringstream& out, const Stmt& s, int indent, bool elseif) {
  const std::string marker = s.fix_marker ? "  -- fix" : "";
  switch (s.kind) {
    case StmtKind::kIf:
      out << pad(indent) << (elseif ? "elseif " : "if ") << print(s.expr) << " then" << marker
          << "\n";
      block(out, s.then_part, indent + 1);
      if (s.else_part.size() == 1 && s.else_part[0].kind == StmtKind::kIf &&
          !s.else_part[0].fix_marker) {
        stmt(out, s.else_part[0], indent, true);
        return;
      }
      if (!s.else_part.empty()) {
        out << pad(indent) << "else\n";
        block(out, s.else_part, indent + 1);
      }
      out << pad(indent) << "end\n";
      return;
    case StmtKind::kLoop:
      out << pad(indent) << "from" << marker << "\n";
      block(out, s.init_part, indent + 1);
      out << pad(indent) << "until\n" << pad(indent + 1) << print(s.expr) << "\n";
      out << pad(indent) << "loop\n";
      block(out, s.loop_part, indent + 1);
      out << pad(indent) << "end\n";
      return;
    default:
      out << pad(indent) << print_head(s) << marker << "\n";
      return;
  }
}

std::string decls(const std::vector<VarDecl>& d, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out += sep;
    out += d[i].name + ": " + to_string(d[i].type);
  }
  return out;
}

}  // namespace

std::string print(const ExprPtr& e) { return expr(*e); }

std::string print_head(const Stmt& s) {
  switch (s.kind) {
    case StmtKind::kAssign:
      return print(s.target) + " := " + print(s.expr);
    case StmtKind::kCall:
      return print(s.expr);
    case StmtKind::kIf:
      return "if " + print(s.expr);
    case StmtKind::kLoop:
      return "until " + print(s.expr);
    case StmtKind::kCheck:
      return "check " + clause_text(s.clause) + " end";
    case StmtKind::kCreate:
      return "create " + print(s.target) + "." + s.creation_procedure + args(s.args);
  }
  return "?";
}

std::string print(const Stmt& s, int indent) {
  std::ostringstream out;
  stmt(out, s, indent);
  return out.str();
}

std::string print(const std::vector<Stmt>& b, int indent) {
  std::ostringstream out;
  block(out, b, indent);
  return out.str();
}

std::string print(const RoutineDecl& r, int indent) {
  std::ostringstream out;
  out << pad(indent) << r.name;
  if (!r.params.empty()) out << " (" << decls(r.params, "; ") << ")";
  if (r.result_type) out << ": " << to_string(*r.result_type);
  out << "\n";
  if (!r.require.empty()) {
    out << pad(indent + 1) << "require\n";
    for (const Clause& c : r.require) out << pad(indent + 2) << clause_text(c) << "\n";
  }
  if (!r.locals.empty()) {
    out << pad(indent + 1) << "local\n";
    for (const VarDecl& d : r.locals) out << pad(indent + 2) << d.name << ": " << to_string(d.type) << "\n";
  }
  if (r.deferred) {
    out << pad(indent + 1) << "deferred\n";
  } else {
    out << pad(indent + 1) << "do\n";
    block(out, r.body, indent + 2);
  }
  if (!r.ensure.empty()) {
    out << pad(indent + 1) << "ensure\n";
    for (const Clause& c : r.ensure) out << pad(indent + 2) << clause_text(c) << "\n";
  }
  out << pad(indent + 1) << "end\n";
  return out.str();
}

std::string print(const ClassDecl& cls) {
  std::ostringstream out;
  out << "class " << cls.name << "\n";
  if (!cls.creation_procedures.empty()) {
    out << "create\n  ";
    for (std::size_t i = 0; i < cls.creation_procedures.size(); ++i) {
      out << (i > 0 ? ", " : "") << cls.creation_procedures[i];
    }
    out << "\n";
  }
  out << "feature\n";
  for (const AttributeDecl& a : cls.attributes) out << "  " << a.name << ": " << to_string(a.type) << "\n";
  for (const RoutineDecl& r : cls.routines) {
    out << "\n" << print(r, 1);
  }
  out << "end\n";
  return out.str();
}

std::string print(const Program& program) {
  std::string out;
  for (std::size_t i = 0; i < program.classes.size(); ++i) {
    if (i > 0) out += "\n";
    out += print(program.classes[i]);
  }
  return out;
}

}  // namespace confix
