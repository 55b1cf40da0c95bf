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

#ifndef CONFIX_SESSION_CORPUS_HPP_
#define CONFIX_SESSION_CORPUS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "confix/syntax/ast.hpp"

namespace confix {

// Line-oriented `key = value` file; `#` starts a comment line. Keys may
// repeat and keep their order.
struct ConfigFile {
  std::vector<std::pair<std::string, std::string>> entries;

  // Last value of `key`, or `fallback`.
  std::string get(const std::string& key, const std::string& fallback = {}) const;
  std::vector<std::string> all(const std::string& key) const;
  bool has(const std::string& key) const;
};

// Throws std::runtime_error on unreadable files or malformed lines.
ConfigFile read_config(const std::string& path);
ConfigFile parse_config(const std::string& text);

// A fix the corpus expects among the reported ones.
struct ExpectedFix {
  enum class Mode {
    kBefore,  // the statements are inserted before the faulty instruction
    kGuard,   // the faulty instruction is wrapped in `if <condition> then ... end`
  };
  std::string fault;  // textual fault key
  Mode mode = Mode::kBefore;
  std::vector<std::string> alternatives;  // statements or conditions
};

// Parses "<fault> ; before|guard ; <alt> | <alt> ...".
ExpectedFix parse_expected_fix(const std::string& text);

// Structural normal form used to compare fixes: `a > b` becomes `b < a`,
// `a >= b` becomes `b <= a`, negated comparisons are folded, double
// negation is dropped, and the operands of `=` and `/=` are ordered.
ExprPtr normalize(const ExprPtr& e);
std::string normalized_text(const RoutineDecl& routine);

// The routine the expected fix describes, one per alternative. Throws
// CdlError when an alternative does not parse in the routine's scope.
std::vector<RoutineDecl> expected_routines(const Program& program, const Location& fault,
                                           const ExpectedFix& expected);

// `patched` equals one of the expected routines up to normalization.
bool matches_expected(const Program& program, const Location& fault,
                      const ExpectedFix& expected, const RoutineDecl& patched);

}  // namespace confix

#endif  // CONFIX_SESSION_CORPUS_HPP_
