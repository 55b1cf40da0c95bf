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

#include "confix/localization/localizer.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

#include "common/parallel.hpp"
#include "confix/syntax/cfg.hpp"
#include "confix/syntax/printer.hpp"

namespace confix {

namespace {

using Key = std::tuple<int, int, bool>;  // location, predicate, value

std::set<Key> observe(const Program& program, RoutineRef routine, const PredicateSet& predicates,
                      const TestCase& test, const RunOptions& options) {
  RunOptions o = options;
  o.record_steps = true;
  o.snapshots = true;
  o.snapshot_routine = routine;
  const RunResult run = run_test(program, test, o);
  std::set<Key> seen;
  for (std::size_t i = 0; i < run.trace.steps.size(); ++i) {
    const TraceStep& s = run.trace.steps[i];
    if (s.location.routine != routine || s.snapshot < 0) continue;
    const auto values = eval_all_at(run.trace, static_cast<int>(i), predicates.operands);
    for (std::size_t p = 0; p < predicates.predicates.size(); ++p) {
      if (auto v = evaluate_predicate(predicates.predicates[p], values)) {
        seen.emplace(s.location.index, static_cast<int>(p), *v);
      }
    }
  }
  return seen;
}

}  // namespace

std::vector<Component> collect_components(const Program& program, RoutineRef routine,
                                          const PredicateSet& predicates,
                                          const std::vector<TestCase>& passing,
                                          const std::vector<TestCase>& failing,
                                          const RunOptions& options, int jobs) {
  std::vector<const TestCase*> tests;
  for (const TestCase& t : passing) tests.push_back(&t);
  for (const TestCase& t : failing) tests.push_back(&t);
  std::vector<std::set<Key>> seen(tests.size());
  detail::parallel_for(tests.size(), jobs, [&](std::size_t i) {
    seen[i] = observe(program, routine, predicates, *tests[i], options);
  });
  std::map<Key, std::pair<int, int>> counts;
  for (std::size_t i = 0; i < tests.size(); ++i) {
    const bool is_failing = i >= passing.size();
    for (const Key& k : seen[i]) {
      auto& c = counts[k];
      (is_failing ? c.second : c.first) += 1;
    }
  }
  std::vector<Component> out;
  for (const auto& [k, c] : counts) {
    Component comp;
    std::tie(comp.location, comp.predicate, comp.value) = k;
    comp.passing = c.first;
    comp.failing = c.second;
    out.push_back(comp);
  }
  return out;
}

namespace {

int max_proximity(const ExprPtr& clause, const PredicateSet& predicates) {
  int max = 0;
  for (const Predicate& q : predicates.predicates) {
    max = std::max(max, expression_proximity(q.expr, clause));
  }
  return max;
}

}  // namespace

Rational expression_dependence(const ExprPtr& p, const ExprPtr& clause,
                               const PredicateSet& predicates) {
  if (!clause) return Rational{0};
  const int max = max_proximity(clause, predicates);
  if (max == 0) return Rational{0};
  return Rational{expression_proximity(p, clause), max};
}

void score_components(const Program& program, const FaultContext& fault,
                      const PredicateSet& predicates, std::vector<Component>& components,
                      const ScoreConfig& config) {
  const RoutineRef routine = fault.key.location.routine;
  const ControlFlowGraph cfg = build_cfg(program.routine(routine), routine, true);
  const int j = fault.key.location.index;
  const int max = fault.clause ? max_proximity(fault.clause, predicates) : 0;
  std::map<int, Rational> edep;
  std::map<int, Rational> cdep;
  for (Component& c : components) {
    auto e = edep.find(c.predicate);
    if (e == edep.end()) {
      const Predicate& p = predicates.predicates.at(static_cast<std::size_t>(c.predicate));
      const Rational value =
          max == 0 ? Rational{0} : Rational{expression_proximity(p.expr, fault.clause), max};
      e = edep.emplace(c.predicate, value).first;
    }
    auto d = cdep.find(c.location);
    if (d == cdep.end()) d = cdep.emplace(c.location, control_dependence(cfg, c.location, j)).first;
    c.scores.cdep = d->second;
    c.scores.edep = e->second;
    c.scores.dyn = dynamic_score(c.passing, c.failing, config);
    c.scores.fixme = fixme_score(c.scores.edep, c.scores.cdep, c.scores.dyn);
  }
}

void rank_components(const PredicateSet& predicates, std::vector<Component>& components) {
  std::vector<std::string> text;
  for (const Predicate& p : predicates.predicates) text.push_back(print(p.expr));
  std::stable_sort(components.begin(), components.end(),
                   [&](const Component& a, const Component& b) {
                     if (a.scores.fixme != b.scores.fixme) return a.scores.fixme > b.scores.fixme;
                     if (a.scores.dyn != b.scores.dyn) return a.scores.dyn > b.scores.dyn;
                     if (a.scores.cdep != b.scores.cdep) return a.scores.cdep > b.scores.cdep;
                     const auto& ta = text[static_cast<std::size_t>(a.predicate)];
                     const auto& tb = text[static_cast<std::size_t>(b.predicate)];
                     if (ta != tb) return ta < tb;
                     if (a.location != b.location) return a.location < b.location;
                     return a.value && !b.value;
                   });
}

Localization localize(const Program& program, const FaultContext& fault,
                      const FaultInputs& inputs, const LocalizationConfig& config) {
  Localization out;
  out.fault = fault;
  const RoutineRef routine = fault.key.location.routine;
  out.expressions = harvest_expressions(program, routine, fault.clause, config.max_expressions);
  out.predicates = build_predicates(out.expressions, fault.clause);
  std::vector<Component> all = collect_components(program, routine, out.predicates,
                                                  inputs.passing, inputs.failing, config.run,
                                                  config.jobs);
  out.observed = static_cast<int>(all.size());
  for (Component& c : all) {
    if (c.failing > 0) out.ranked.push_back(c);
  }
  score_components(program, fault, out.predicates, out.ranked, config.scores);
  rank_components(out.predicates, out.ranked);
  return out;
}

void write_components_tsv(std::ostream& out, const Localization& localization, int limit) {
  out << "location\tpredicate\tvalue\tpassing\tfailing\tcdep\tedep\tdyn\tfixme\n";
  int rank = 0;
  for (const Component& c : localization.ranked) {
    if (limit >= 0 && rank++ >= limit) break;
    out << c.location << '\t' << print(localization.predicate(c).expr) << '\t'
        << (c.value ? "True" : "False") << '\t' << c.passing << '\t' << c.failing << '\t'
        << format_decimal(c.scores.cdep) << '\t' << format_decimal(c.scores.edep) << '\t'
        << format_decimal(c.scores.dyn) << '\t' << format_decimal(c.scores.fixme) << '\n';
  }
}

}  // namespace confix
