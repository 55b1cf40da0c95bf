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

#include "confix/session/corpus.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "confix/fixgen/fixgen.hpp"
#include "confix/syntax/parser.hpp"
#include "confix/syntax/printer.hpp"

namespace confix {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(trim(part));
  return out;
}

}  // namespace

std::string ConfigFile::get(const std::string& key, const std::string& fallback) const {
  std::string value = fallback;
  for (const auto& [k, v] : entries) {
    if (k == key) value = v;
  }
  return value;
}

std::vector<std::string> ConfigFile::all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries) {
    if (k == key) out.push_back(v);
  }
  return out;
}

bool ConfigFile::has(const std::string& key) const {
  for (const auto& [k, v] : entries) {
    if (k == key) return true;
  }
  return false;
}

ConfigFile parse_config(const std::string& text) {
  ConfigFile config;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || trim(line.substr(0, eq)).empty()) {
      throw std::runtime_error("config line " + std::to_string(number) + ": expected key = value");
    }
    config.entries.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return config;
}

ConfigFile read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

ExpectedFix parse_expected_fix(const std::string& text) {
  const auto parts = split(text, ';');
  if (parts.size() != 3) {
    throw std::runtime_error("expected fix needs '<fault> ; <mode> ; <alternatives>': " + text);
  }
  ExpectedFix out;
  out.fault = parts[0];
  if (parts[1] == "before") {
    out.mode = ExpectedFix::Mode::kBefore;
  } else if (parts[1] == "guard") {
    out.mode = ExpectedFix::Mode::kGuard;
  } else {
    throw std::runtime_error("unknown expected-fix mode '" + parts[1] + "'");
  }
  out.alternatives = split(parts[2], '|');
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

// Canonical form of a comparison whose operands are already normal.
ExprPtr comparison(BinaryOp op, const ExprPtr& a, const ExprPtr& b) {
  switch (op) {
    case BinaryOp::kGt: return make_binary(BinaryOp::kLt, b, a);
    case BinaryOp::kGe: return make_binary(BinaryOp::kLe, b, a);
    case BinaryOp::kEq:
    case BinaryOp::kNe:
      return compare(*a, *b) <= 0 ? make_binary(op, a, b) : make_binary(op, b, a);
    default: return make_binary(op, a, b);
  }
}

void normalize_block(std::vector<Stmt>& block) {
  for (Stmt& s : block) {
    s.fix_marker = false;
    if (s.target) s.target = normalize(s.target);
    if (s.expr) s.expr = normalize(s.expr);
    if (s.clause.expr) s.clause.expr = normalize(s.clause.expr);
    for (ExprPtr& a : s.args) a = normalize(a);
    for (auto* part : {&s.init_part, &s.loop_part, &s.then_part, &s.else_part}) {
      normalize_block(*part);
    }
  }
}

}  // namespace

ExprPtr normalize(const ExprPtr& e) {
  if (!e) return e;
  auto copy = std::make_shared<Expr>(*e);
  if (copy->target) copy->target = normalize(copy->target);
  for (ExprPtr& op : copy->operands) op = normalize(op);
  if (copy->kind == ExprKind::kUnary && copy->unary_op == UnaryOp::kNot) {
    const ExprPtr& inner = copy->operands[0];
    if (inner->kind == ExprKind::kUnary && inner->unary_op == UnaryOp::kNot) {
      return inner->operands[0];
    }
    if (inner->kind == ExprKind::kBinary && is_comparison(inner->binary_op)) {
      return comparison(negated(inner->binary_op), inner->lhs(), inner->rhs());
    }
  }
  if (copy->kind == ExprKind::kBinary && is_comparison(copy->binary_op)) {
    return comparison(copy->binary_op, copy->lhs(), copy->rhs());
  }
  return copy;
}

std::string normalized_text(const RoutineDecl& routine) {
  RoutineDecl copy = routine;
  normalize_block(copy.body);
  return print(copy.body);
}

std::vector<RoutineDecl> expected_routines(const Program& program, const Location& fault,
                                           const ExpectedFix& expected) {
  const RoutineDecl& original = program.routine(fault.routine);
  const Stmt* old = find_stmt(original.body, fault.index);
  if (!old) throw std::out_of_range("no statement at location " + std::to_string(fault.index));
  std::vector<RoutineDecl> out;
  for (const std::string& alt : expected.alternatives) {
    std::vector<Stmt> replacement;
    if (expected.mode == ExpectedFix::Mode::kBefore) {
      replacement = parse_statements(alt, program, fault.routine);
      replacement.push_back(*old);
    } else {
      replacement.push_back(make_if(parse_expression(alt, program, fault.routine), {*old}));
    }
    RoutineDecl r = patch_routine(original, fault.index, replacement);
    check_routine(program, fault.routine.class_index, r);
    out.push_back(std::move(r));
  }
  return out;
}

bool matches_expected(const Program& program, const Location& fault,
                      const ExpectedFix& expected, const RoutineDecl& patched) {
  const std::string text = normalized_text(patched);
  for (const RoutineDecl& r : expected_routines(program, fault, expected)) {
    if (normalized_text(r) == text) return true;
  }
  return false;
}

}  // namespace confix
