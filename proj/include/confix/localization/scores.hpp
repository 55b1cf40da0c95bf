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

#ifndef CONFIX_LOCALIZATION_SCORES_HPP_
#define CONFIX_LOCALIZATION_SCORES_HPP_

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "confix/syntax/ast.hpp"
#include "confix/syntax/cfg.hpp"

namespace confix {

using Rational = boost::multiprecision::cpp_rational;

// Parses "1/3", "0.25" or "2" exactly. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);
std::string format_decimal(const Rational& value, int digits = 6);

struct ScoreConfig {
  Rational alpha{1, 3};
  Rational beta{2, 3};
  Rational gamma{1};

  // Empty when valid, else a message.
  std::string validate() const;
};

struct ScoreRecord {
  Rational cdep;
  Rational edep;
  Rational dyn;
  Rational fixme;
};

// gamma + alpha/(1-alpha) * (1 - beta + beta*alpha^p - alpha^f)
Rational dynamic_score(int passing, int failing, const ScoreConfig& config = {});
// gamma + sum_{i=1..f} alpha^i - beta * sum_{i=1..p} alpha^i
Rational dynamic_score_series(int passing, int failing, const ScoreConfig& config = {});

// Harmonic mean of the three scores; 0 when edep or cdep is 0.
Rational fixme_score(const Rational& edep, const Rational& cdep, const Rational& dyn);

// 1 - cdist(l, j) / max{cdist(k, j) | k reaches j}; 0 when l does not reach
// j. When only j reaches j, cdep(j, j) = 1.
Rational control_dependence(const ControlFlowGraph& cfg, int l, int j);

// Number of shared sub-expressions.
int expression_proximity(const ExprPtr& a, const ExprPtr& b);

}  // namespace confix

#endif  // CONFIX_LOCALIZATION_SCORES_HPP_
