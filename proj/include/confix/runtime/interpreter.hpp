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

#ifndef CONFIX_RUNTIME_INTERPRETER_HPP_
#define CONFIX_RUNTIME_INTERPRETER_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "confix/runtime/test_case.hpp"
#include "confix/runtime/value.hpp"
#include "confix/syntax/ast.hpp"

namespace confix {

enum class ViolationKind { kPrecondition, kPostcondition, kCheck, kVoidCall };

const char* to_string(ViolationKind kind);

// A contract violation. Precondition violations of nested calls are located
// at the calling statement; postconditions at the violating routine's exit
// location; checks at the check itself; void calls wherever they happen.
struct Violation {
  ViolationKind kind = ViolationKind::kVoidCall;
  Location location;
  RoutineRef owner;   // routine whose contract holds the clause
  std::string tag;    // empty for void calls
  ExprPtr clause;     // in the owner's scope; null for void calls
  ExprPtr call_site;  // the violating call (preconditions only)

  // "feature.tag", or "-" for void calls.
  std::string clause_id(const Program& program) const;
};

enum class Verdict { kPass, kFail, kInvalid, kTimeout };

const char* to_string(Verdict verdict);

struct Snapshot {
  Heap heap;
  RoutineRef routine;
  int current = -1;
  std::vector<Value> args;
  std::vector<Value> locals;
  Value result;
};

struct TraceStep {
  Location location;
  int activation = 0;
  int snapshot = -1;  // -1 when no snapshot was taken
};

// loc(t) plus the state before each recorded step.
struct Trace {
  const Program* program = nullptr;
  std::vector<TraceStep> steps;
  std::vector<Snapshot> snapshots;
  std::vector<RoutineRef> activations;  // routine of each activation id

  bool enters(RoutineRef routine) const;
};

struct RunOptions {
  std::int64_t step_budget = 100000;
  int max_depth = 200;
  bool record_steps = true;
  // Snapshots are taken for steps of this routine only; all when unset.
  std::optional<RoutineRef> snapshot_routine;
  bool snapshots = true;
};

struct StepResult {
  Verdict verdict = Verdict::kPass;
  std::optional<Violation> violation;
};

struct RunResult {
  Verdict verdict = Verdict::kPass;
  std::optional<Violation> violation;
  Trace trace;
};

class Machine;

// A test in progress. Copying an execution is cheap (the heap is shared
// copy-on-write), which lets callers try a step and roll it back.
class Execution {
 public:
  Execution(const Program& program, RunOptions options = {});
  Execution(const Execution& other);
  Execution& operator=(const Execution& other);
  ~Execution();

  // Runs one driver step. Anything but kPass ends the test.
  StepResult run(const TestStep& step);

  const Heap& heap() const;
  const std::map<std::string, Value>& variables() const;
  const Trace& trace() const;
  Trace take_trace();

 private:
  std::unique_ptr<Machine> machine_;
};

RunResult run_test(const Program& program, const TestCase& test, const RunOptions& options = {});

// Value of `expr` in the state before trace step `step`. Undefined when the
// step has no snapshot, a name is out of scope, Void is dereferenced, a
// contract is violated, or the budget runs out. Never alters the trace.
std::optional<Value> eval_at(const Trace& trace, int step, const ExprPtr& expr,
                             std::int64_t budget = 10000);

// eval_at for several expressions, each from the same fresh state.
std::vector<std::optional<Value>> eval_all_at(const Trace& trace, int step,
                                              const std::vector<ExprPtr>& exprs,
                                              std::int64_t budget = 10000);

}  // namespace confix

#endif  // CONFIX_RUNTIME_INTERPRETER_HPP_
