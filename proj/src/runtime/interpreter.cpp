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

#include "confix/runtime/interpreter.hpp"

#include <deque>

namespace confix {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kPrecondition:
      return "precondition";
    case ViolationKind::kPostcondition:
      return "postcondition";
    case ViolationKind::kCheck:
      return "check";
    case ViolationKind::kVoidCall:
      return "void_call";
  }
  return "?";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kInvalid:
      return "invalid";
    case Verdict::kTimeout:
      return "timeout";
  }
  return "?";
}

std::string Violation::clause_id(const Program& program) const {
  if (kind == ViolationKind::kVoidCall) return "-";
  return program.routine(owner).name + "." + tag;
}

bool Trace::enters(RoutineRef routine) const {
  for (const RoutineRef& r : activations) {
    if (r == routine) return true;
  }
  return false;
}

namespace {

struct ViolationSignal {
  Violation violation;
};
struct InvalidSignal {};
struct TimeoutSignal {};
struct UndefinedSignal {};

struct Frame {
  RoutineRef routine;
  const RoutineDecl* decl = nullptr;
  int current = -1;
  std::vector<Value> args;
  std::vector<Value> locals;
  Value result;
  int location = 0;
  int activation = -1;
};

int index_of(const std::vector<VarDecl>& decls, const std::string& name) {
  for (std::size_t i = 0; i < decls.size(); ++i) {
    if (decls[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

std::int64_t wrap_add(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}

std::int64_t wrap_sub(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) - static_cast<std::uint64_t>(b));
}

}  // namespace

class Machine {
 public:
  Machine(const Program& program, RunOptions options)
      : program_(&program), options_(std::move(options)) {
    trace_.program = program_;
  }

  StepResult run(const TestStep& step) {
    try {
      driver_step(step);
      return {};
    } catch (const ViolationSignal& s) {
      frames_.clear();
      return {Verdict::kFail, s.violation};
    } catch (const InvalidSignal&) {
      frames_.clear();
      return {Verdict::kInvalid, std::nullopt};
    } catch (const TimeoutSignal&) {
      frames_.clear();
      return {Verdict::kTimeout, std::nullopt};
    }
  }

  std::optional<Value> evaluate_in(const Snapshot& snap, int location, const ExprPtr& expr) {
    heap_ = snap.heap;
    frames_.clear();
    steps_ = 0;
    Frame f;
    f.routine = snap.routine;
    f.decl = &program_->routine(snap.routine);
    f.current = snap.current;
    f.args = snap.args;
    f.locals = snap.locals;
    f.result = snap.result;
    f.location = location;
    frames_.push_back(std::move(f));
    try {
      return eval(expr);
    } catch (const ViolationSignal&) {
    } catch (const InvalidSignal&) {
    } catch (const TimeoutSignal&) {
    } catch (const UndefinedSignal&) {
    }
    return std::nullopt;
  }

  const Heap& heap() const { return heap_; }
  const std::map<std::string, Value>& variables() const { return variables_; }
  const Trace& trace() const { return trace_; }
  Trace take_trace() { return std::move(trace_); }

 private:
  // Driver ------------------------------------------------------------------

  Value driver_arg(const TestArg& arg) const {
    switch (arg.kind) {
      case TestArg::Kind::kInt:
        return Value::Int(arg.int_value);
      case TestArg::Kind::kBool:
        return Value::Bool(arg.bool_value);
      case TestArg::Kind::kVoid:
        return Value::Void();
      case TestArg::Kind::kVar: {
        auto it = variables_.find(arg.var);
        if (it == variables_.end()) throw InvalidSignal{};
        return it->second;
      }
    }
    throw InvalidSignal{};
  }

  bool conforms(const Value& v, const Type& t) const {
    switch (t.kind) {
      case TypeKind::kInteger:
        return v.kind == ValueKind::kInt;
      case TypeKind::kBoolean:
        return v.kind == ValueKind::kBool;
      case TypeKind::kReference:
        return v.is_void() ||
               (v.kind == ValueKind::kRef &&
                program_->classes[heap_.at(v.ref).class_index].name == t.class_name);
      default:
        return false;
    }
  }

  std::vector<Value> driver_args(const RoutineDecl& r, const std::vector<TestArg>& args) const {
    if (args.size() != r.params.size()) throw InvalidSignal{};
    std::vector<Value> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
      Value v = driver_arg(args[i]);
      if (!conforms(v, r.params[i].type)) throw InvalidSignal{};
      out.push_back(v);
    }
    return out;
  }

  void driver_step(const TestStep& step) {
    if (step.kind == TestStep::Kind::kCreate) {
      const int c = program_->find_class(step.class_name);
      if (c < 0) throw InvalidSignal{};
      const ClassDecl& cls = program_->classes[c];
      if (!cls.is_creation_procedure(step.routine)) throw InvalidSignal{};
      const int r = cls.find_routine(step.routine);
      std::vector<Value> args = driver_args(cls.routines[r], step.args);
      const int id = allocate(c);
      invoke(RoutineRef{c, r}, id, std::move(args), nullptr);
      variables_[step.var] = Value::Ref(id);
      return;
    }
    auto it = variables_.find(step.var);
    if (it == variables_.end() || it->second.kind != ValueKind::kRef) throw InvalidSignal{};
    const int target = it->second.ref;
    const int c = heap_.at(target).class_index;
    const int r = program_->classes[c].find_routine(step.routine);
    if (r < 0) throw InvalidSignal{};
    std::vector<Value> args = driver_args(program_->classes[c].routines[r], step.args);
    invoke(RoutineRef{c, r}, target, std::move(args), nullptr);
  }

  // Routines ----------------------------------------------------------------

  int allocate(int class_index) {
    std::vector<Value> fields;
    for (const AttributeDecl& a : program_->classes[class_index].attributes) {
      fields.push_back(Value::Default(a.type));
    }
    return heap_.allocate(class_index, std::move(fields));
  }

  // Evaluates a contract clause; a violation raised while evaluating it
  // counts as the clause failing.
  bool holds(const Clause& clause) {
    const std::size_t depth = frames_.size();
    try {
      return eval(clause.expr).bool_value;
    } catch (const ViolationSignal&) {
      frames_.resize(depth);
      return false;
    }
  }

  void record_step(int location) {
    if (++steps_ > options_.step_budget) throw TimeoutSignal{};
    if (!options_.record_steps) return;
    const Frame& f = frames_.back();
    TraceStep step{Location{f.routine, location}, f.activation, -1};
    if (options_.snapshots &&
        (!options_.snapshot_routine || *options_.snapshot_routine == f.routine)) {
      step.snapshot = static_cast<int>(trace_.snapshots.size());
      trace_.snapshots.push_back(Snapshot{heap_, f.routine, f.current, f.args, f.locals, f.result});
    }
    trace_.steps.push_back(step);
  }

  Value invoke(RoutineRef ref, int target, std::vector<Value> args, const ExprPtr& call_site) {
    if (static_cast<int>(frames_.size()) >= options_.max_depth) throw TimeoutSignal{};
    const RoutineDecl& decl = program_->routine(ref);
    const bool from_driver = frames_.empty();
    Frame f;
    f.routine = ref;
    f.decl = &decl;
    f.current = target;
    f.args = std::move(args);
    for (const VarDecl& l : decl.locals) f.locals.push_back(Value::Default(l.type));
    if (decl.result_type) f.result = Value::Default(*decl.result_type);
    f.activation = static_cast<int>(trace_.activations.size());
    if (options_.record_steps) trace_.activations.push_back(ref);
    frames_.push_back(std::move(f));

    for (const Clause& c : decl.require) {
      if (holds(c)) continue;
      if (from_driver) throw InvalidSignal{};
      const Frame& caller = frames_[frames_.size() - 2];
      throw ViolationSignal{Violation{ViolationKind::kPrecondition,
                                      Location{caller.routine, caller.location}, ref, c.tag,
                                      c.expr, call_site}};
    }
    exec_block(decl.body);
    frames_.back().location = decl.exit_location();
    record_step(decl.exit_location());
    for (const Clause& c : decl.ensure) {
      if (holds(c)) continue;
      throw ViolationSignal{Violation{ViolationKind::kPostcondition,
                                      Location{ref, decl.exit_location()}, ref, c.tag, c.expr,
                                      nullptr}};
    }
    Value result = frames_.back().result;
    frames_.pop_back();
    return result;
  }

  [[noreturn]] void void_call() {
    const Frame& f = frames_.back();
    const Location here{f.routine, f.location};
    throw ViolationSignal{Violation{ViolationKind::kVoidCall, here, f.routine, {}, nullptr, nullptr}};
  }

  // Statements --------------------------------------------------------------

  void exec_block(const std::vector<Stmt>& block) {
    for (const Stmt& s : block) exec(s);
  }

  void exec(const Stmt& s) {
    if (s.kind == StmtKind::kLoop) {
      exec_block(s.init_part);
      while (true) {
        frames_.back().location = s.location;
        record_step(s.location);
        if (eval(s.expr).bool_value) break;
        exec_block(s.loop_part);
      }
      return;
    }
    frames_.back().location = s.location;
    record_step(s.location);
    switch (s.kind) {
      case StmtKind::kAssign:
        assign(*s.target, eval(s.expr));
        break;
      case StmtKind::kCall:
        call(s.expr);
        break;
      case StmtKind::kIf:
        exec_block(eval(s.expr).bool_value ? s.then_part : s.else_part);
        break;
      case StmtKind::kCheck:
        if (!holds(s.clause)) {
          const Frame& f = frames_.back();
          throw ViolationSignal{Violation{ViolationKind::kCheck, Location{f.routine, s.location},
                                          f.routine, s.clause.tag, s.clause.expr, nullptr}};
        }
        break;
      case StmtKind::kCreate: {
        const int c = program_->find_class(s.class_name);
        const ClassDecl& cls = program_->classes[c];
        const int r = cls.find_routine(s.creation_procedure);
        std::vector<Value> args;
        for (const ExprPtr& a : s.args) args.push_back(eval(a));
        const int id = allocate(c);
        auto site = std::make_shared<Expr>();
        site->kind = ExprKind::kCall;
        site->name = s.creation_procedure;
        site->target = s.target;
        site->operands = s.args;
        invoke(RoutineRef{c, r}, id, std::move(args), site);
        assign(*s.target, Value::Ref(id));
        break;
      }
      case StmtKind::kLoop:
        break;
    }
  }

  void assign(const Expr& target, const Value& v) {
    Frame& f = frames_.back();
    if (target.kind == ExprKind::kVar) {
      if (target.var_kind == VarKind::kResult) {
        f.result = v;
        return;
      }
      const int i = index_of(f.decl->locals, target.name);
      if (i < 0) throw UndefinedSignal{};
      f.locals[i] = v;
      return;
    }
    const int c = heap_.at(f.current).class_index;
    const int a = program_->classes[c].find_attribute(target.name);
    if (a < 0) throw UndefinedSignal{};
    heap_.set_field(f.current, a, v);
  }

  // Expressions -------------------------------------------------------------

  Value target_of(const Expr& e) {
    if (e.target == nullptr) return Value::Ref(frames_.back().current);
    return eval(e.target);
  }

  Value call(const ExprPtr& expr) {
    const Expr& e = *expr;
    const Value t = target_of(e);
    if (t.kind != ValueKind::kRef) void_call();
    const int c = heap_.at(t.ref).class_index;
    const ClassDecl& cls = program_->classes[c];
    const int a = cls.find_attribute(e.name);
    if (a >= 0) return heap_.at(t.ref).fields[a];
    const int r = cls.find_routine(e.name);
    if (r < 0) throw UndefinedSignal{};
    std::vector<Value> args;
    args.reserve(e.operands.size());
    for (const ExprPtr& op : e.operands) args.push_back(eval(op));
    return invoke(RoutineRef{c, r}, t.ref, std::move(args), expr);
  }

  Value var(const Expr& e) {
    const Frame& f = frames_.back();
    switch (e.var_kind) {
      case VarKind::kResult:
        if (!f.decl->is_query()) throw UndefinedSignal{};
        return f.result;
      case VarKind::kArgument: {
        const int i = index_of(f.decl->params, e.name);
        if (i < 0) throw UndefinedSignal{};
        return f.args[i];
      }
      case VarKind::kLocal: {
        const int i = index_of(f.decl->locals, e.name);
        if (i < 0) throw UndefinedSignal{};
        return f.locals[i];
      }
    }
    throw UndefinedSignal{};
  }

  Value eval(const ExprPtr& expr) {
    const Expr& e = *expr;
    switch (e.kind) {
      case ExprKind::kIntLit:
        return Value::Int(e.int_value);
      case ExprKind::kBoolLit:
        return Value::Bool(e.bool_value);
      case ExprKind::kVoidLit:
        return Value::Void();
      case ExprKind::kCurrent:
        return Value::Ref(frames_.back().current);
      case ExprKind::kVar:
        return var(e);
      case ExprKind::kCall:
        return call(expr);
      case ExprKind::kUnary: {
        const Value v = eval(e.operands[0]);
        if (e.unary_op == UnaryOp::kNot) return Value::Bool(!v.bool_value);
        return Value::Int(wrap_sub(0, v.int_value));
      }
      case ExprKind::kBinary:
        return binary(e);
    }
    throw UndefinedSignal{};
  }

  Value binary(const Expr& e) {
    if (e.binary_op == BinaryOp::kAnd) {
      if (!eval(e.operands[0]).bool_value) return Value::Bool(false);
      return Value::Bool(eval(e.operands[1]).bool_value);
    }
    if (e.binary_op == BinaryOp::kOr) {
      if (eval(e.operands[0]).bool_value) return Value::Bool(true);
      return Value::Bool(eval(e.operands[1]).bool_value);
    }
    const Value l = eval(e.operands[0]);
    const Value r = eval(e.operands[1]);
    switch (e.binary_op) {
      case BinaryOp::kPlus:
        return Value::Int(wrap_add(l.int_value, r.int_value));
      case BinaryOp::kMinus:
        return Value::Int(wrap_sub(l.int_value, r.int_value));
      case BinaryOp::kEq:
        return Value::Bool(l == r);
      case BinaryOp::kNe:
        return Value::Bool(!(l == r));
      case BinaryOp::kLt:
        return Value::Bool(l.int_value < r.int_value);
      case BinaryOp::kLe:
        return Value::Bool(l.int_value <= r.int_value);
      case BinaryOp::kGt:
        return Value::Bool(l.int_value > r.int_value);
      case BinaryOp::kGe:
        return Value::Bool(l.int_value >= r.int_value);
      default:
        break;
    }
    throw UndefinedSignal{};
  }

  const Program* program_;
  RunOptions options_;
  Heap heap_;
  std::map<std::string, Value> variables_;
  std::deque<Frame> frames_;
  Trace trace_;
  std::int64_t steps_ = 0;
};

Execution::Execution(const Program& program, RunOptions options)
    : machine_(std::make_unique<Machine>(program, std::move(options))) {}

Execution::Execution(const Execution& other)
    : machine_(std::make_unique<Machine>(*other.machine_)) {}

Execution& Execution::operator=(const Execution& other) {
  if (this != &other) machine_ = std::make_unique<Machine>(*other.machine_);
  return *this;
}

Execution::~Execution() = default;

StepResult Execution::run(const TestStep& step) { return machine_->run(step); }
const Heap& Execution::heap() const { return machine_->heap(); }
const std::map<std::string, Value>& Execution::variables() const { return machine_->variables(); }
const Trace& Execution::trace() const { return machine_->trace(); }
Trace Execution::take_trace() { return machine_->take_trace(); }

RunResult run_test(const Program& program, const TestCase& test, const RunOptions& options) {
  Execution execution(program, options);
  RunResult result;
  for (const TestStep& step : test.steps) {
    StepResult r = execution.run(step);
    if (r.verdict != Verdict::kPass) {
      result.verdict = r.verdict;
      result.violation = std::move(r.violation);
      break;
    }
  }
  result.trace = execution.take_trace();
  return result;
}

std::optional<Value> eval_at(const Trace& trace, int step, const ExprPtr& expr,
                             std::int64_t budget) {
  if (step < 0 || step >= static_cast<int>(trace.steps.size())) return std::nullopt;
  const TraceStep& s = trace.steps[step];
  if (s.snapshot < 0) return std::nullopt;
  RunOptions options;
  options.step_budget = budget;
  options.record_steps = false;
  Machine machine(*trace.program, options);
  return machine.evaluate_in(trace.snapshots[s.snapshot], s.location.index, expr);
}

std::vector<std::optional<Value>> eval_all_at(const Trace& trace, int step,
                                              const std::vector<ExprPtr>& exprs,
                                              std::int64_t budget) {
  std::vector<std::optional<Value>> out(exprs.size());
  if (step < 0 || step >= static_cast<int>(trace.steps.size())) return out;
  const TraceStep& s = trace.steps[step];
  if (s.snapshot < 0) return out;
  RunOptions options;
  options.step_budget = budget;
  options.record_steps = false;
  Machine machine(*trace.program, options);
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    out[i] = machine.evaluate_in(trace.snapshots[s.snapshot], s.location.index, exprs[i]);
  }
  return out;
}

}  // namespace confix
