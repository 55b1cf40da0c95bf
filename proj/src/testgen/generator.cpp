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

#include "confix/testgen/generator.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <random>
#include <stdexcept>

namespace confix {

namespace {

class TestBuilder {
 public:
  TestBuilder(const Program& program, const GeneratorConfig& config, std::mt19937_64& rng)
      : program_(program), config_(config), rng_(rng) {
    // Only targets and the classes their routines take as arguments are
    // worth creating.
    std::vector<bool> relevant(program.classes.size(), false);
    std::vector<int> work;
    for (std::size_t c = 0; c < program.classes.size(); ++c) {
      if (is_target(static_cast<int>(c))) {
        relevant[c] = true;
        work.push_back(static_cast<int>(c));
      }
    }
    while (!work.empty()) {
      const int c = work.back();
      work.pop_back();
      for (const RoutineDecl& r : program.classes[c].routines) {
        for (const VarDecl& p : r.params) {
          const int d = p.type.is_reference() ? program.find_class(p.type.class_name) : -1;
          if (d >= 0 && !relevant[d]) {
            relevant[d] = true;
            work.push_back(d);
          }
        }
      }
    }
    for (std::size_t c = 0; c < program.classes.size(); ++c) {
      if (relevant[c] && !program.classes[c].creation_procedures.empty()) {
        creatable_.push_back(static_cast<int>(c));
      }
    }
    if (creatable_.empty()) throw std::invalid_argument("program has no creatable class");
  }

  TestRecord build(std::string id) {
    Execution execution(program_, quiet_options());
    TestRecord record;
    record.test.id = std::move(id);
    pool_.clear();
    next_var_ = 0;
    std::optional<TestStep> rejected;
    for (int i = 0; i < config_.max_steps; ++i) {
      bool committed = false;
      for (int attempt = 0; attempt < config_.attempts_per_step && !committed; ++attempt) {
        auto candidate = random_step();
        if (!candidate) break;
        Execution trial = execution;
        StepResult r = trial.run(candidate->step);
        if (r.verdict == Verdict::kInvalid) rejected = candidate->step;
        if (r.verdict == Verdict::kInvalid || r.verdict == Verdict::kTimeout) continue;
        execution = std::move(trial);
        record.test.steps.push_back(candidate->step);
        if (candidate->step.kind == TestStep::Kind::kCreate) {
          pool_[candidate->class_index].push_back(candidate->step.var);
          ++next_var_;
        }
        observe(execution.heap());
        committed = true;
        if (r.verdict == Verdict::kFail) {
          record.verdict = Verdict::kFail;
          record.fault = fault_key_of(program_, *r.violation);
          return record;
        }
      }
      if (!committed) break;
    }
    // Nothing could be executed validly: keep the rejected step as an
    // invalid test rather than an empty passing one.
    if (record.test.steps.empty() && rejected) {
      record.test.steps.push_back(*rejected);
      record.verdict = Verdict::kInvalid;
    }
    return record;
  }

 private:
  struct Candidate {
    TestStep step;
    int class_index = -1;
  };

  RunOptions quiet_options() const {
    RunOptions o = config_.run;
    o.record_steps = false;
    o.snapshots = false;
    return o;
  }

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  std::vector<std::int64_t> ints() const {
    std::vector<std::int64_t> v = config_.int_pool;
    v.insert(v.end(), observed_.begin(), observed_.end());
    return v;
  }

  TestArg random_arg(const Type& type) {
    switch (type.kind) {
      case TypeKind::kInteger: {
        const auto v = ints();
        return TestArg::Int(v[pick(v.size())]);
      }
      case TypeKind::kBoolean:
        return TestArg::Bool(pick(2) == 1);
      default: {
        const int c = program_.find_class(type.class_name);
        auto it = pool_.find(c);
        if (it == pool_.end() || it->second.empty()) return TestArg::Void();
        const std::size_t k = pick(it->second.size() + 1);
        if (k == it->second.size()) return TestArg::Void();
        return TestArg::Var(it->second[k]);
      }
    }
  }

  std::vector<TestArg> random_args(const RoutineDecl& r) {
    std::vector<TestArg> args;
    for (const VarDecl& p : r.params) args.push_back(random_arg(p.type));
    return args;
  }

  bool is_target(int class_index) const {
    if (config_.target_classes.empty()) return true;
    const std::string& name = program_.classes[class_index].name;
    return std::find(config_.target_classes.begin(), config_.target_classes.end(), name) !=
           config_.target_classes.end();
  }

  std::optional<Candidate> random_create() {
    const int c = creatable_[pick(creatable_.size())];
    const ClassDecl& cls = program_.classes[c];
    const std::string& proc = cls.creation_procedures[pick(cls.creation_procedures.size())];
    Candidate out;
    out.class_index = c;
    out.step.kind = TestStep::Kind::kCreate;
    out.step.var = "v" + std::to_string(next_var_ + 1);
    out.step.class_name = cls.name;
    out.step.routine = proc;
    out.step.args = random_args(cls.routines[cls.find_routine(proc)]);
    return out;
  }

  std::optional<Candidate> random_invoke() {
    std::vector<std::pair<int, std::string>> receivers;
    for (const auto& [c, vars] : pool_) {
      if (!is_target(c) || invocable(c).empty()) continue;
      for (const std::string& v : vars) receivers.emplace_back(c, v);
    }
    if (receivers.empty()) return std::nullopt;
    const auto& [c, var] = receivers[pick(receivers.size())];
    const std::vector<int> routines = invocable(c);
    const RoutineDecl& r = program_.classes[c].routines[routines[pick(routines.size())]];
    Candidate out;
    out.class_index = c;
    out.step.kind = TestStep::Kind::kInvoke;
    out.step.var = var;
    out.step.routine = r.name;
    out.step.args = random_args(r);
    return out;
  }

  // Creation is picked with probability 1/4 once something can be invoked.
  std::optional<Candidate> random_step() {
    if (pick(4) != 0) {
      if (auto c = random_invoke()) return c;
    }
    return random_create();
  }

  std::vector<int> invocable(int c) const {
    std::vector<int> out;
    const ClassDecl& cls = program_.classes[c];
    for (std::size_t r = 0; r < cls.routines.size(); ++r) {
      if (cls.is_creation_procedure(cls.routines[r].name) || cls.routines[r].deferred) continue;
      out.push_back(static_cast<int>(r));
    }
    return out;
  }

  void observe(const Heap& heap) {
    for (int id = 0; id < heap.size(); ++id) {
      for (const Value& v : heap.at(id).fields) {
        if (static_cast<int>(observed_.size()) >= config_.observed_cap) return;
        if (v.kind != ValueKind::kInt) continue;
        const bool known =
            std::find(config_.int_pool.begin(), config_.int_pool.end(), v.int_value) !=
                config_.int_pool.end() ||
            std::find(observed_.begin(), observed_.end(), v.int_value) != observed_.end();
        if (!known) observed_.push_back(v.int_value);
      }
    }
  }

  const Program& program_;
  const GeneratorConfig& config_;
  std::mt19937_64& rng_;
  std::vector<int> creatable_;
  std::map<int, std::vector<std::string>> pool_;
  std::vector<std::int64_t> observed_;
  int next_var_ = 0;
};

}  // namespace

TestSuite generate_suite(const Program& program, const GeneratorConfig& config) {
  TestSuite suite;
  if (config.tests <= 0) return suite;
  std::mt19937_64 rng(config.seed);
  TestBuilder builder(program, config, rng);
  for (int i = 0; i < config.tests; ++i) {
    char id[16];
    std::snprintf(id, sizeof id, "t%04d", i + 1);
    suite.tests.push_back(builder.build(id));
  }
  return suite;
}

}  // namespace confix
