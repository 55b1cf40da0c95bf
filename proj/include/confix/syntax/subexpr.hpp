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

#ifndef CONFIX_SYNTAX_SUBEXPR_HPP_
#define CONFIX_SYNTAX_SUBEXPR_HPP_

#include <functional>
#include <set>

#include "confix/syntax/ast.hpp"

namespace confix {

using ExprSet = std::set<ExprPtr, ExprLess>;

// The expression itself plus, recursively, the target and arguments of every
// query call (operands for infix and prefix forms). Literals are included;
// the implicit or explicit Current target is not.
ExprSet sub_of_expression(const ExprPtr& e);

// As above but keeping Current; used where Current is a meaningful target.
ExprSet sub_with_current(const ExprPtr& e);

// a is a sub-expression of b (Current counted), reflexive.
bool is_subexpression(const ExprPtr& a, const ExprPtr& b);

// sub of a location: the condition of an if or loop, the right-hand side of
// an assignment, the arguments of a call or creation. Empty for checks.
ExprSet sub_of_location(const Stmt& stmt);

// Top-down rewrite: where `fn` returns a node, it replaces the visited node
// and is not itself visited. Unchanged subtrees are shared.
ExprPtr rewrite(const ExprPtr& e, const std::function<ExprPtr(const ExprPtr&)>& fn);

// Every occurrence of `from` in `e` replaced by `to`.
ExprPtr replace_subexpression(const ExprPtr& e, const ExprPtr& from, const ExprPtr& to);

}  // namespace confix

#endif  // CONFIX_SYNTAX_SUBEXPR_HPP_
