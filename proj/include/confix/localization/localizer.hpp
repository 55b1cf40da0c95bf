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

#ifndef CONFIX_LOCALIZATION_LOCALIZER_HPP_
#define CONFIX_LOCALIZATION_LOCALIZER_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "confix/localization/expressions.hpp"
#include "confix/localization/scores.hpp"
#include "confix/testgen/suite.hpp"

namespace confix {

// A state component <location, predicate, value> with the number of passing
// and failing tests in which it occurs.
struct Component {
  int location = 0;
  int predicate = -1;  // index into PredicateSet::predicates
  bool value = true;
  int passing = 0;
  int failing = 0;
  ScoreRecord scores;
};

struct LocalizationConfig {
  ScoreConfig scores;
  int max_expressions = 200;
  int jobs = 1;
  RunOptions run;
};

struct Localization {
  FaultContext fault;
  ExpressionSet expressions;
  PredicateSet predicates;
  int observed = 0;  // distinct components before dropping #f = 0
  std::vector<Component> ranked;

  const Predicate& predicate(const Component& c) const {
    return predicates.predicates.at(static_cast<std::size_t>(c.predicate));
  }
};

// Components observed at the fault's routine over both test sets, counted
// once per test.
std::vector<Component> collect_components(const Program& program, RoutineRef routine,
                                          const PredicateSet& predicates,
                                          const std::vector<TestCase>& passing,
                                          const std::vector<TestCase>& failing,
                                          const RunOptions& options = {}, int jobs = 1);

// Fills the scores of every component in place.
void score_components(const Program& program, const FaultContext& fault,
                      const PredicateSet& predicates, std::vector<Component>& components,
                      const ScoreConfig& config = {});

// fixme, then dyn, then cdep, all descending; then predicate text, location
// and value for a total order.
void rank_components(const PredicateSet& predicates, std::vector<Component>& components);

// edep(p, c): eprox(p, c) over the largest eprox(q, c) among the predicates;
// 0 when that maximum is 0.
Rational expression_dependence(const ExprPtr& p, const ExprPtr& clause,
                               const PredicateSet& predicates);

Localization localize(const Program& program, const FaultContext& fault,
                      const FaultInputs& inputs, const LocalizationConfig& config = {});

// Tab-separated table in rank order: location, predicate, value, #p, #f,
// cdep, edep, dyn, fixme. `limit` < 0 prints every component.
void write_components_tsv(std::ostream& out, const Localization& localization, int limit = -1);

}  // namespace confix

#endif  // CONFIX_LOCALIZATION_LOCALIZER_HPP_
