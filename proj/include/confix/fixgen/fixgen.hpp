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

#ifndef CONFIX_FIXGEN_FIXGEN_HPP_
#define CONFIX_FIXGEN_FIXGEN_HPP_

#include <string>
#include <vector>

#include "confix/localization/localizer.hpp"
#include "confix/syntax/ast.hpp"

namespace confix {

// Boolean e: True, False, not e. Integer e: 0, 1, -1, e + 1, e - 1.
// Anything else: empty.
std::vector<ExprPtr> derive_expressions(const ExprPtr& e);

// References are always modifiable (through their commands); integers and
// booleans only when assignable: locals, Result and attributes of Current.
bool is_modifiable(const Program& program, RoutineRef routine, const ExprPtr& e);

// Largest sub-expressions of `p` (Current included) that are modifiable.
std::vector<ExprPtr> target_expressions(const Program& program, RoutineRef routine,
                                        const ExprPtr& p);

enum class ActionKind { kModification, kReplacement };

struct FixAction {
  ActionKind kind = ActionKind::kModification;
  ExprPtr target;  // modified or replaced expression
  Stmt snippet;
};

struct ActionConfig {
  // Argument tuples tried per command on a reference target.
  int max_argument_sets = 3;
};

// Assignments of derived values to integer and boolean targets, and command
// calls on reference targets. `clause` ranks argument choices.
std::vector<FixAction> expression_modifications(const Program& program, RoutineRef routine,
                                                const ExprPtr& p, const ExprPtr& clause,
                                                const ActionConfig& config = {});

// The statement at `location` with one of p's largest integer or boolean
// sub-expressions replaced by a derived expression. Only sub-expressions of
// the location's own expressions qualify; conditions of compound statements
// are rewritten in place and the whole statement is the snippet.
std::vector<FixAction> expression_replacements(const Program& program, RoutineRef routine,
                                               int location, const ExprPtr& p);

enum class FixSchema { kA, kB, kC, kD };

char schema_letter(FixSchema schema);

struct FixCandidate {
  int id = 0;
  FaultKey fault;
  Component component;
  int component_rank = 0;  // 1-based
  std::string predicate;   // printed predicate of the component
  FixSchema schema = FixSchema::kA;
  ExprPtr fail;
  std::optional<FixAction> action;  // absent for schema c
  RoutineDecl routine;              // patched and re-checked
};

struct FixgenConfig {
  int max_components = 10;
  ActionConfig actions;
};

struct FixgenStats {
  int components = 0;
  int generated = 0;
  int rejected = 0;    // patched routine failed to type-check
  int duplicates = 0;  // same patched routine as an earlier candidate
};

// The instruction at `location` replaced by `replacement`; at the exit
// location `replacement` is appended to the body. Throws std::out_of_range
// when the location is absent.
RoutineDecl patch_routine(const RoutineDecl& routine, int location,
                          const std::vector<Stmt>& replacement);

// Every schema instantiated with every action of one component, in schema
// then snippet-text order. Schema a takes modifications only; at the exit
// location only schemas a and b apply. Candidates are not yet checked.
std::vector<FixCandidate> instantiate_candidates(const Program& program, RoutineRef routine,
                                                 const Component& component, const ExprPtr& p,
                                                 const std::vector<FixAction>& actions);

// Candidates for the top components, re-checked and deduplicated, with ids
// in generation order.
std::vector<FixCandidate> generate_candidates(const Program& program,
                                              const Localization& localization,
                                              const FixgenConfig& config = {},
                                              FixgenStats* stats = nullptr);

// The program with the candidate's routine substituted.
Program apply_candidate(const Program& program, const FixCandidate& candidate);

}  // namespace confix

#endif  // CONFIX_FIXGEN_FIXGEN_HPP_
