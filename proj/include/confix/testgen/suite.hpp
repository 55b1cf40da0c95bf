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

#ifndef CONFIX_TESTGEN_SUITE_HPP_
#define CONFIX_TESTGEN_SUITE_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confix/runtime/interpreter.hpp"
#include "confix/runtime/test_case.hpp"
#include "confix/syntax/ast.hpp"

namespace confix {

// Identity of a fault: where the violation is raised and which clause it
// violates ("feature.tag", or "-" for a call on Void).
struct FaultKey {
  Location location;
  std::string clause;
  friend auto operator<=>(const FaultKey&, const FaultKey&) = default;
};

FaultKey fault_key_of(const Program& program, const Violation& violation);
// "CLASS.routine:loc:feature.tag"
std::string format_fault_key(const Program& program, const FaultKey& key);
std::optional<FaultKey> parse_fault_key(const Program& program, const std::string& text);

struct TestRecord {
  TestCase test;
  Verdict verdict = Verdict::kPass;
  std::optional<FaultKey> fault;  // kFail only
};

struct TestSuite {
  std::vector<TestRecord> tests;

  std::vector<const TestRecord*> passing() const;
  std::map<FaultKey, std::vector<const TestRecord*>> failing() const;
  int count(Verdict verdict) const;
};

// Line-oriented suite format: one `test <id> { step ; step }` line followed
// by its `verdict ...` line.
void write_suite(std::ostream& out, const Program& program, const TestSuite& suite);
TestSuite read_suite(std::istream& in, const Program& program);

// Replays every test; returns the ids whose verdict differs from the stored
// one.
std::vector<std::string> verify_suite(const Program& program, const TestSuite& suite,
                                      const RunOptions& options = {});

struct FaultInputs {
  RoutineRef routine;
  std::vector<TestCase> passing;  // P_r
  std::vector<TestCase> failing;  // F_r for the fault
  std::vector<std::string> warnings;
};

struct SelectionCaps {
  int max_passing = 25;
  int max_failing = 11;
};

// P_r holds passing tests that enter the fault's routine; both sets are cut
// to the caps in suite order.
FaultInputs select_fault_inputs(const Program& program, const TestSuite& suite,
                                const FaultKey& fault, const SelectionCaps& caps = {},
                                const RunOptions& options = {});

}  // namespace confix

#endif  // CONFIX_TESTGEN_SUITE_HPP_
