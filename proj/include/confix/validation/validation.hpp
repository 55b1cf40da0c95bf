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

#ifndef CONFIX_VALIDATION_VALIDATION_HPP_
#define CONFIX_VALIDATION_VALIDATION_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "confix/fixgen/fixgen.hpp"
#include "confix/testgen/suite.hpp"

namespace confix {

struct TestOutcome {
  std::string test;
  bool was_failing = false;
  Verdict verdict = Verdict::kPass;
};

struct ValidationVerdict {
  int candidate = 0;
  int passed_failing = 0;
  int passed_passing = 0;
  bool valid = false;
  std::vector<TestOutcome> outcomes;  // failing tests first
};

// Replays both test sets on the patched program. Valid when every test
// passes; a timeout or invalid outcome counts as not passing.
ValidationVerdict validate_candidate(const Program& program, const FixCandidate& candidate,
                                     const FaultInputs& inputs, const RunOptions& options = {});

// One verdict per candidate, in candidate order.
std::vector<ValidationVerdict> validate_all(const Program& program,
                                            const std::vector<FixCandidate>& candidates,
                                            const FaultInputs& inputs,
                                            const RunOptions& options = {}, int jobs = 1);

struct ReportedFix {
  int rank = 0;
  const FixCandidate* candidate = nullptr;
  std::string patch;  // unified diff of the routine
};

struct FixReport {
  std::string fault;
  std::string clause;
  std::vector<std::pair<std::string, std::string>> settings;  // echoed in the header
  std::vector<std::string> diagnostics;
  int passing_tests = 0;
  int failing_tests = 0;
  int components_observed = 0;
  int components_ranked = 0;
  FixgenStats fixgen;
  int candidates = 0;
  int valid = 0;
  std::vector<ReportedFix> fixes;
};

// Valid candidates ordered by the originating component's fixme (then
// candidate order), cut to `top`.
FixReport rank_and_report(const Program& program, const Localization& localization,
                          const std::vector<FixCandidate>& candidates,
                          const std::vector<ValidationVerdict>& verdicts, int top = 15);

// Line-based unified diff with three lines of context; empty when equal.
std::string unified_diff(const std::string& before, const std::string& after,
                         const std::string& before_name, const std::string& after_name);

void write_report_text(std::ostream& out, const FixReport& report);
// One JSON object per reported fix.
void write_report_jsonl(std::ostream& out, const FixReport& report);

}  // namespace confix

#endif  // CONFIX_VALIDATION_VALIDATION_HPP_
