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

#ifndef CONFIX_SRC_SYNTAX_CHECKER_HPP_
#define CONFIX_SRC_SYNTAX_CHECKER_HPP_

#include "confix/syntax/ast.hpp"

namespace confix::detail {

enum class Mode { kPrecondition, kBody, kPostcondition };

struct Scope {
  const Program& program;
  int class_index;
  const RoutineDecl* routine;
  Mode mode;
};

// Name resolution and type checking. Resolution is idempotent, so already
// resolved trees (e.g. patched routines) can be checked again.
ExprPtr resolve(const ExprPtr& expr, const Scope& scope);
void check_stmt(Stmt& stmt, const Scope& scope);
void check_routine_body(const Program& program, int class_index, RoutineDecl& routine);
void check_program(Program& program);

}  // namespace confix::detail

#endif  // CONFIX_SRC_SYNTAX_CHECKER_HPP_
