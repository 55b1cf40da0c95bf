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

#ifndef CONFIX_SYNTAX_PRINTER_HPP_
#define CONFIX_SYNTAX_PRINTER_HPP_

#include <string>
#include <vector>

#include "confix/syntax/ast.hpp"

namespace confix {

// Pretty printer producing source that parses back to a structurally equal
// tree. Features of Current are printed unqualified.
std::string print(const ExprPtr& expr);
std::string print(const Stmt& stmt, int indent = 0);
std::string print(const std::vector<Stmt>& block, int indent = 0);
std::string print(const RoutineDecl& routine, int indent = 0);
std::string print(const ClassDecl& cls);
std::string print(const Program& program);

// One-line rendering of a statement's head: the statement itself for simple
// statements, or "if c", "until c", "check t: c" for compound ones.
std::string print_head(const Stmt& stmt);

}  // namespace confix

#endif  // CONFIX_SYNTAX_PRINTER_HPP_
