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

#ifndef CONFIX_SYNTAX_PARSER_HPP_
#define CONFIX_SYNTAX_PARSER_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "confix/syntax/ast.hpp"

namespace confix {

enum class DiagnosticKind { kSyntax, kType, kDuplicate };

struct Diagnostic {
  DiagnosticKind kind = DiagnosticKind::kSyntax;
  SourcePos pos;
  std::string message;
};

std::string format(const Diagnostic& diagnostic);

// Raised for any syntax, name or type error in CDL source.
class CdlError : public std::runtime_error {
 public:
  explicit CdlError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Parses, resolves names, type-checks and assigns statement locations.
Program parse_program(std::string_view source);

// Parses `text` as an expression in the scope of `scope`'s body.
ExprPtr parse_expression(std::string_view text, const Program& program, RoutineRef scope);

// Parses a statement sequence in the scope of `scope`'s body. The returned
// statements carry no locations.
std::vector<Stmt> parse_statements(std::string_view text, const Program& program,
                                   RoutineRef scope);

// Re-resolves and re-type-checks one routine of `program` in place, e.g.
// after a patch. Throws CdlError.
void check_routine(const Program& program, int class_index, RoutineDecl& routine);

}  // namespace confix

#endif  // CONFIX_SYNTAX_PARSER_HPP_
