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

#include "confix/testgen/suite.hpp"

#include <istream>
#include <ostream>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace confix {

FaultKey fault_key_of(const Program& program, const Violation& violation) {
  return FaultKey{violation.location, violation.clause_id(program)};
}

std::string format_fault_key(const Program& program, const FaultKey& key) {
  return program.routine_name(key.location.routine) + ":" + std::to_string(key.location.index) +
         ":" + key.clause;
}

std::optional<FaultKey> parse_fault_key(const Program& program, const std::string& text) {
  static const std::regex kKey(R"(^\s*([A-Za-z][A-Za-z0-9_]*\.[A-Za-z][A-Za-z0-9_]*):(\d+):(\S+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, kKey)) return std::nullopt;
  auto routine = program.parse_routine_name(m[1]);
  if (!routine) return std::nullopt;
  return FaultKey{Location{*routine, std::stoi(m[2])}, m[3]};
}

std::vector<const TestRecord*> TestSuite::passing() const {
  std::vector<const TestRecord*> out;
  for (const TestRecord& t : tests) {
    if (t.verdict == Verdict::kPass) out.push_back(&t);
  }
  return out;
}

std::map<FaultKey, std::vector<const TestRecord*>> TestSuite::failing() const {
  std::map<FaultKey, std::vector<const TestRecord*>> out;
  for (const TestRecord& t : tests) {
    if (t.verdict == Verdict::kFail && t.fault) out[*t.fault].push_back(&t);
  }
  return out;
}

int TestSuite::count(Verdict verdict) const {
  int n = 0;
  for (const TestRecord& t : tests) n += t.verdict == verdict;
  return n;
}

// File format ---------------------------------------------------------------

void write_suite(std::ostream& out, const Program& program, const TestSuite& suite) {
  for (const TestRecord& t : suite.tests) {
    out << "test " << t.test.id << " {";
    for (std::size_t i = 0; i < t.test.steps.size(); ++i) {
      out << (i == 0 ? " " : " ; ") << print(t.test.steps[i]);
    }
    out << " }\n";
    out << "verdict " << to_string(t.verdict);
    if (t.verdict == Verdict::kFail && t.fault) {
      out << " " << program.routine_name(t.fault->location.routine) << " "
          << t.fault->location.index << " " << t.fault->clause;
    }
    out << "\n";
  }
}

namespace {

[[noreturn]] void bad_line(int line, const std::string& message) {
  throw std::runtime_error("suite line " + std::to_string(line) + ": " + message);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

TestArg parse_arg(const std::string& raw, int line) {
  const std::string a = trim(raw);
  static const std::regex kInt(R"(^-?\d+$)");
  static const std::regex kIdent(R"(^[A-Za-z][A-Za-z0-9_]*$)");
  if (std::regex_match(a, kInt)) return TestArg::Int(std::stoll(a));
  if (a == "True" || a == "False") return TestArg::Bool(a == "True");
  if (a == "Void") return TestArg::Void();
  if (std::regex_match(a, kIdent)) return TestArg::Var(a);
  bad_line(line, "bad argument '" + a + "'");
}

TestStep parse_step(const std::string& raw, int line) {
  static const std::regex kCreate(
      R"(^create\s+([A-Za-z]\w*)\s*:\s*([A-Za-z]\w*)\.([A-Za-z]\w*)\s*(?:\((.*)\))?$)");
  static const std::regex kInvoke(R"(^([A-Za-z]\w*)\.([A-Za-z]\w*)\s*(?:\((.*)\))?$)");
  const std::string s = trim(raw);
  std::smatch m;
  TestStep step;
  std::string args;
  if (std::regex_match(s, m, kCreate)) {
    step.kind = TestStep::Kind::kCreate;
    step.var = m[1];
    step.class_name = m[2];
    step.routine = m[3];
    args = m[4];
  } else if (std::regex_match(s, m, kInvoke)) {
    step.kind = TestStep::Kind::kInvoke;
    step.var = m[1];
    step.routine = m[2];
    args = m[3];
  } else {
    bad_line(line, "bad step '" + s + "'");
  }
  if (!trim(args).empty()) {
    std::stringstream in(args);
    std::string a;
    while (std::getline(in, a, ',')) step.args.push_back(parse_arg(a, line));
  }
  return step;
}

}  // namespace

TestSuite read_suite(std::istream& in, const Program& program) {
  static const std::regex kTest(R"(^test\s+(\S+)\s*\{(.*)\}\s*$)");
  TestSuite suite;
  std::string text;
  int line = 0;
  bool pending = false;
  while (std::getline(in, text)) {
    ++line;
    text = trim(text);
    if (text.empty() || text.rfind("--", 0) == 0) continue;
    std::smatch m;
    if (std::regex_match(text, m, kTest)) {
      if (pending) bad_line(line, "missing verdict");
      TestRecord rec;
      rec.test.id = m[1];
      std::stringstream body(m[2].str());
      std::string step;
      while (std::getline(body, step, ';')) {
        if (!trim(step).empty()) rec.test.steps.push_back(parse_step(step, line));
      }
      suite.tests.push_back(std::move(rec));
      pending = true;
      continue;
    }
    if (text.rfind("verdict", 0) == 0) {
      if (!pending) bad_line(line, "verdict without test");
      std::istringstream v(text.substr(7));
      std::string kind;
      v >> kind;
      TestRecord& rec = suite.tests.back();
      if (kind == "pass") {
        rec.verdict = Verdict::kPass;
      } else if (kind == "invalid") {
        rec.verdict = Verdict::kInvalid;
      } else if (kind == "timeout") {
        rec.verdict = Verdict::kTimeout;
      } else if (kind == "fail") {
        std::string routine, tag;
        int loc = 0;
        if (!(v >> routine >> loc >> tag)) bad_line(line, "incomplete fail verdict");
        auto ref = program.parse_routine_name(routine);
        if (!ref) bad_line(line, "unknown routine " + routine);
        rec.verdict = Verdict::kFail;
        rec.fault = FaultKey{Location{*ref, loc}, tag};
      } else {
        bad_line(line, "unknown verdict '" + kind + "'");
      }
      pending = false;
      continue;
    }
    bad_line(line, "unrecognized line");
  }
  if (pending) bad_line(line, "missing verdict");
  return suite;
}

std::vector<std::string> verify_suite(const Program& program, const TestSuite& suite,
                                      const RunOptions& options) {
  RunOptions quiet = options;
  quiet.record_steps = false;
  quiet.snapshots = false;
  std::vector<std::string> mismatched;
  for (const TestRecord& t : suite.tests) {
    RunResult r = run_test(program, t.test, quiet);
    std::optional<FaultKey> fault;
    if (r.violation) fault = fault_key_of(program, *r.violation);
    if (r.verdict != t.verdict || (r.verdict == Verdict::kFail && fault != t.fault)) {
      mismatched.push_back(t.test.id);
    }
  }
  return mismatched;
}

FaultInputs select_fault_inputs(const Program& program, const TestSuite& suite,
                                const FaultKey& fault, const SelectionCaps& caps,
                                const RunOptions& options) {
  FaultInputs out;
  out.routine = fault.location.routine;
  RunOptions probe = options;
  probe.snapshots = false;
  for (const TestRecord& t : suite.tests) {
    if (t.verdict == Verdict::kFail && t.fault == fault) {
      if (static_cast<int>(out.failing.size()) < caps.max_failing) out.failing.push_back(t.test);
      continue;
    }
    if (t.verdict != Verdict::kPass) continue;
    if (static_cast<int>(out.passing.size()) >= caps.max_passing) continue;
    if (run_test(program, t.test, probe).trace.enters(out.routine)) out.passing.push_back(t.test);
  }
  const std::string name = format_fault_key(program, fault);
  if (out.failing.empty()) out.warnings.push_back("no failing tests for " + name);
  if (out.passing.empty()) out.warnings.push_back("no passing tests enter " + program.routine_name(out.routine));
  return out;
}

}  // namespace confix
