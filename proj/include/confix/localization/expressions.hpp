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

#ifndef CONFIX_LOCALIZATION_EXPRESSIONS_HPP_
#define CONFIX_LOCALIZATION_EXPRESSIONS_HPP_

#include <optional>
#include <vector>

#include "confix/runtime/interpreter.hpp"
#include "confix/runtime/value.hpp"
#include "confix/syntax/ast.hpp"
#include "confix/syntax/subexpr.hpp"
#include "confix/testgen/suite.hpp"

namespace confix {

// A fault seen from the routine that must be fixed.
struct FaultContext {
  FaultKey key;
  ViolationKind kind = ViolationKind::kPrecondition;
  // The violated clause in the scope of key.location.routine. Callee
  // preconditions are instantiated at the call site.
  ExprPtr clause;
};

// The clause with the callee's arguments replaced by the actual arguments
// and Current by the call target. Other violations return the clause as is.
ExprPtr instantiate_clause(const Program& program, const Violation& violation);

// Throws std::invalid_argument for calls on Void, which have no clause.
FaultContext make_fault_context(const Program& program, const Violation& violation);

// Replays `failing` until one raises `key`.
std::optional<FaultContext> find_fault_context(const Program& program, const FaultKey& key,
                                               const std::vector<TestCase>& failing,
                                               const RunOptions& options = {});

struct ExpressionSet {
  ExprSet base;                   // sub-expressions of the body and clause
  std::vector<ExprPtr> unfolded;  // base plus argument-less queries on references
};

// Non-constant sub-expressions (Current excluded) of the routine body and
// of `clause`, then unfolded one level. When the unfolded set exceeds `cap`
// the expressions sharing the most sub-expressions with `clause` are kept.
ExpressionSet harvest_expressions(const Program& program, RoutineRef routine,
                                  const ExprPtr& clause, int cap = 200);

// not q -> q; comparisons flip; anything else -> not p.
ExprPtr complement(const ExprPtr& predicate);

enum class PredicateForm { kBoolean, kVoidness, kComparison };

// Predicates are evaluated from the values of a shared operand table, so each
// expression is computed once per program state.
struct Predicate {
  ExprPtr expr;
  PredicateForm form = PredicateForm::kBoolean;
  int lhs = -1;                     // operand index
  int rhs = -1;                     // comparisons only
  BinaryOp op = BinaryOp::kEq;      // voidness and comparisons
  bool negate = false;              // boolean complements
};

struct PredicateSet {
  std::vector<ExprPtr> operands;
  std::vector<Predicate> predicates;
};

// Boolean expressions, voidness checks of references, and comparisons of
// integer expressions with each other, with 0 and with the clause's integer
// literals, closed under complement.
PredicateSet build_predicates(const ExpressionSet& expressions, const ExprPtr& clause);

// Truth value from evaluated operands; nullopt when an operand is undefined.
std::optional<bool> evaluate_predicate(const Predicate& predicate,
                                       const std::vector<std::optional<Value>>& operands);

}  // namespace confix

#endif  // CONFIX_LOCALIZATION_EXPRESSIONS_HPP_
