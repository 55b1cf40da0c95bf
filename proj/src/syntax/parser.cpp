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

#include "confix/syntax/parser.hpp"

#include <sstream>
#include <utility>

#include "checker.hpp"
#include "lexer.hpp"

namespace confix {

using detail::Token;
using detail::TokenKind;

std::string format(const Diagnostic& diagnostic) {
  std::ostringstream out;
  switch (diagnostic.kind) {
    case DiagnosticKind::kSyntax:
      out << "syntax error";
      break;
    case DiagnosticKind::kType:
      out << "type error";
      break;
    case DiagnosticKind::kDuplicate:
      out << "duplicate name";
      break;
  }
  out << " at " << diagnostic.pos.line << ":" << diagnostic.pos.column << ": "
      << diagnostic.message;
  return out.str();
}

namespace {

std::string join_messages(const std::vector<Diagnostic>& diagnostics) {
  std::string text;
  for (const auto& d : diagnostics) {
    if (!text.empty()) text += "\n";
    text += format(d);
  }
  return text;
}

}  // namespace

CdlError::CdlError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Program program() {
    Program p;
    while (!at_end()) p.classes.push_back(class_decl());
    if (p.classes.empty()) fail("expected 'class'");
    return p;
  }

  ExprPtr lone_expression() {
    ExprPtr e = expression();
    if (!at_end()) fail("unexpected '" + peek().text + "' after expression");
    return e;
  }

  std::vector<Stmt> lone_statements() {
    std::vector<Stmt> stmts = statements();
    if (!at_end()) fail("unexpected '" + peek().text + "'");
    return stmts;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at_end() const { return peek().kind == TokenKind::kEnd; }
  bool is_keyword(std::string_view k, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::kKeyword && peek(ahead).text == k;
  }
  bool is_symbol(std::string_view s, std::size_t ahead = 0) const {
    return peek(ahead).kind == TokenKind::kSymbol && peek(ahead).text == s;
  }
  bool accept_keyword(std::string_view k) {
    if (!is_keyword(k)) return false;
    ++pos_;
    return true;
  }
  bool accept_symbol(std::string_view s) {
    if (!is_symbol(s)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw CdlError({{DiagnosticKind::kSyntax, peek().pos, message}});
  }
  void expect_keyword(std::string_view k) {
    if (!accept_keyword(k)) fail("expected '" + std::string(k) + "' but found '" + describe() + "'");
  }
  void expect_symbol(std::string_view s) {
    if (!accept_symbol(s)) fail("expected '" + std::string(s) + "' but found '" + describe() + "'");
  }
  std::string describe() const { return at_end() ? "end of input" : peek().text; }
  std::string identifier() {
    if (peek().kind != TokenKind::kIdent) fail("expected identifier but found '" + describe() + "'");
    return tokens_[pos_++].text;
  }

  Type type() {
    const std::string name = identifier();
    if (name == "INTEGER") return Type::Integer();
    if (name == "BOOLEAN") return Type::Boolean();
    return Type::Reference(name);
  }

  ClassDecl class_decl() {
    expect_keyword("class");
    ClassDecl cls;
    cls.name = identifier();
    if (accept_keyword("create")) {
      while (peek().kind == TokenKind::kIdent) {
        cls.creation_procedures.push_back(identifier());
        accept_symbol(",");
      }
    }
    while (accept_keyword("feature")) {
      while (peek().kind == TokenKind::kIdent) feature_decl(cls);
    }
    expect_keyword("end");
    return cls;
  }

  bool routine_body_ahead() const {
    return is_keyword("require") || is_keyword("local") || is_keyword("do") ||
           is_keyword("deferred");
  }

  void decl_group(std::vector<VarDecl>& out) {
    std::vector<std::string> names{identifier()};
    while (accept_symbol(",")) names.push_back(identifier());
    expect_symbol(":");
    const Type t = type();
    for (auto& n : names) out.push_back({std::move(n), t});
  }

  void feature_decl(ClassDecl& cls) {
    const std::string name = identifier();
    std::vector<VarDecl> params;
    bool has_params = false;
    if (accept_symbol("(")) {
      has_params = true;
      decl_group(params);
      while (accept_symbol(";")) decl_group(params);
      expect_symbol(")");
    }
    std::optional<Type> result;
    if (accept_symbol(":")) result = type();
    if (!routine_body_ahead()) {
      if (has_params || !result) fail("expected routine body for '" + name + "'");
      cls.attributes.push_back({name, *result});
      accept_symbol(";");
      return;
    }
    RoutineDecl r;
    r.name = name;
    r.params = std::move(params);
    r.result_type = std::move(result);
    if (accept_keyword("require")) r.require = clauses();
    if (accept_keyword("local")) {
      while (peek().kind == TokenKind::kIdent) {
        decl_group(r.locals);
        accept_symbol(";");
      }
    }
    if (accept_keyword("deferred")) {
      r.deferred = true;
    } else {
      expect_keyword("do");
      r.body = statements();
    }
    if (accept_keyword("ensure")) r.ensure = clauses();
    expect_keyword("end");
    cls.routines.push_back(std::move(r));
  }

  bool clause_start() const {
    return !at_end() && !is_keyword("local") && !is_keyword("do") && !is_keyword("deferred") &&
           !is_keyword("end") && !is_keyword("ensure");
  }

  Clause clause() {
    Clause c;
    if (peek().kind == TokenKind::kIdent && is_symbol(":", 1)) {
      c.tag = identifier();
      expect_symbol(":");
    }
    c.expr = expression();
    return c;
  }

  std::vector<Clause> clauses() {
    std::vector<Clause> out;
    while (clause_start()) {
      out.push_back(clause());
      accept_symbol(";");
    }
    return out;
  }

  bool statement_start() const {
    if (peek().kind == TokenKind::kIdent) return true;
    return is_keyword("if") || is_keyword("from") || is_keyword("check") ||
           is_keyword("create") || is_keyword("Result") || is_keyword("Current");
  }

  std::vector<Stmt> statements() {
    std::vector<Stmt> out;
    while (true) {
      while (accept_symbol(";")) {
      }
      if (!statement_start()) break;
      out.push_back(statement());
    }
    return out;
  }

  Stmt statement() {
    const SourcePos pos = peek().pos;
    Stmt s;
    if (accept_keyword("if")) {
      s = if_tail();
    } else if (accept_keyword("from")) {
      s.kind = StmtKind::kLoop;
      s.init_part = statements();
      expect_keyword("until");
      s.expr = expression();
      expect_keyword("loop");
      s.loop_part = statements();
      expect_keyword("end");
    } else if (accept_keyword("check")) {
      s.kind = StmtKind::kCheck;
      s.clause = clause();
      accept_symbol(";");
      expect_keyword("end");
    } else if (accept_keyword("create")) {
      s.kind = StmtKind::kCreate;
      s.target = make_call(nullptr, identifier(), {});
      expect_symbol(".");
      s.creation_procedure = identifier();
      if (is_symbol("(")) s.args = arguments();
    } else if (is_keyword("Result") && is_symbol(":=", 1)) {
      ++pos_;
      ++pos_;
      s = make_assign(make_var("Result", VarKind::kResult), expression());
    } else if (peek().kind == TokenKind::kIdent && is_symbol(":=", 1)) {
      auto target = make_call(nullptr, identifier(), {});
      expect_symbol(":=");
      s = make_assign(std::move(target), expression());
    } else {
      ExprPtr e = postfix();
      if (e->kind != ExprKind::kCall) fail("expected an instruction");
      s = make_call_stmt(std::move(e));
    }
    s.pos = pos;
    return s;
  }

  Stmt if_tail() {
    Stmt s;
    s.kind = StmtKind::kIf;
    s.expr = expression();
    expect_keyword("then");
    s.then_part = statements();
    if (accept_keyword("elseif")) {
      s.else_part.push_back(if_tail());
      return s;
    }
    if (accept_keyword("else")) s.else_part = statements();
    expect_keyword("end");
    return s;
  }

  std::vector<ExprPtr> arguments() {
    expect_symbol("(");
    std::vector<ExprPtr> args;
    if (!is_symbol(")")) {
      args.push_back(expression());
      while (accept_symbol(",")) args.push_back(expression());
    }
    expect_symbol(")");
    return args;
  }

  ExprPtr with_pos(ExprPtr e, SourcePos pos) {
    auto copy = std::make_shared<Expr>(*e);
    copy->pos = pos;
    return copy;
  }

  ExprPtr expression() { return disjunction(); }

  ExprPtr disjunction() {
    ExprPtr lhs = conjunction();
    while (is_keyword("or")) {
      const SourcePos pos = peek().pos;
      ++pos_;
      lhs = with_pos(make_binary(BinaryOp::kOr, lhs, conjunction()), pos);
    }
    return lhs;
  }

  ExprPtr conjunction() {
    ExprPtr lhs = comparison();
    while (is_keyword("and")) {
      const SourcePos pos = peek().pos;
      ++pos_;
      lhs = with_pos(make_binary(BinaryOp::kAnd, lhs, comparison()), pos);
    }
    return lhs;
  }

  ExprPtr comparison() {
    ExprPtr lhs = additive();
    static const std::pair<std::string_view, BinaryOp> kOps[] = {
        {"=", BinaryOp::kEq}, {"/=", BinaryOp::kNe}, {"<", BinaryOp::kLt},
        {"<=", BinaryOp::kLe}, {">", BinaryOp::kGt}, {">=", BinaryOp::kGe}};
    for (const auto& [text, op] : kOps) {
      if (is_symbol(text)) {
        const SourcePos pos = peek().pos;
        ++pos_;
        ExprPtr result = with_pos(make_binary(op, lhs, additive()), pos);
        for (const auto& [t2, unused] : kOps) {
          (void)unused;
          if (is_symbol(t2)) fail("comparison operators do not chain; use 'and'");
        }
        return result;
      }
    }
    return lhs;
  }

  ExprPtr additive() {
    ExprPtr lhs = unary();
    while (is_symbol("+") || is_symbol("-")) {
      const SourcePos pos = peek().pos;
      const BinaryOp op = is_symbol("+") ? BinaryOp::kPlus : BinaryOp::kMinus;
      ++pos_;
      lhs = with_pos(make_binary(op, lhs, unary()), pos);
    }
    return lhs;
  }

  ExprPtr unary() {
    const SourcePos pos = peek().pos;
    if (accept_keyword("not")) return with_pos(make_unary(UnaryOp::kNot, unary()), pos);
    if (accept_symbol("-")) {
      if (peek().kind == TokenKind::kInt) {
        return with_pos(make_int(-tokens_[pos_++].value), pos);
      }
      return with_pos(make_unary(UnaryOp::kNeg, unary()), pos);
    }
    return postfix();
  }

  ExprPtr postfix() {
    ExprPtr e = primary();
    while (is_symbol(".")) {
      ++pos_;
      const SourcePos pos = peek().pos;
      std::string name = identifier();
      std::vector<ExprPtr> args;
      if (is_symbol("(")) args = arguments();
      e = with_pos(make_call(e, std::move(name), std::move(args)), pos);
    }
    return e;
  }

  ExprPtr primary() {
    const Token& tok = peek();
    const SourcePos pos = tok.pos;
    if (tok.kind == TokenKind::kInt) {
      ++pos_;
      return with_pos(make_int(tok.value), pos);
    }
    if (accept_keyword("True")) return with_pos(make_bool(true), pos);
    if (accept_keyword("False")) return with_pos(make_bool(false), pos);
    if (accept_keyword("Void")) return with_pos(make_void(), pos);
    if (accept_keyword("Current")) return with_pos(make_current(), pos);
    if (accept_keyword("Result")) return with_pos(make_var("Result", VarKind::kResult), pos);
    if (accept_symbol("(")) {
      ExprPtr e = expression();
      expect_symbol(")");
      return e;
    }
    if (tok.kind == TokenKind::kIdent) {
      std::string name = identifier();
      std::vector<ExprPtr> args;
      if (is_symbol("(")) args = arguments();
      return with_pos(make_call(nullptr, std::move(name), std::move(args)), pos);
    }
    fail("expected expression but found '" + describe() + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse_program(std::string_view source) {
  Parser parser(detail::tokenize(source));
  Program program = parser.program();
  detail::check_program(program);
  return program;
}

ExprPtr parse_expression(std::string_view text, const Program& program, RoutineRef scope) {
  Parser parser(detail::tokenize(text));
  ExprPtr raw = parser.lone_expression();
  detail::Scope s{program, scope.class_index, &program.routine(scope), detail::Mode::kBody};
  return detail::resolve(raw, s);
}

std::vector<Stmt> parse_statements(std::string_view text, const Program& program,
                                   RoutineRef scope) {
  Parser parser(detail::tokenize(text));
  std::vector<Stmt> stmts = parser.lone_statements();
  detail::Scope s{program, scope.class_index, &program.routine(scope), detail::Mode::kBody};
  for (Stmt& stmt : stmts) detail::check_stmt(stmt, s);
  return stmts;
}

void check_routine(const Program& program, int class_index, RoutineDecl& routine) {
  detail::check_routine_body(program, class_index, routine);
  assign_locations(routine);
}

}  // namespace confix
