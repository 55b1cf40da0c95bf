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

#ifndef CONFIX_SESSION_SESSION_HPP_
#define CONFIX_SESSION_SESSION_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "confix/fixgen/fixgen.hpp"
#include "confix/localization/localizer.hpp"
#include "confix/session/corpus.hpp"
#include "confix/testgen/generator.hpp"
#include "confix/testgen/suite.hpp"
#include "confix/validation/validation.hpp"

namespace confix {

struct SessionConfig {
  std::string program_path;
  std::string suite_path;  // empty: generate from `generation`
  std::string out_dir = "confix-out";
  GeneratorConfig generation;
  ScoreConfig scores;
  SelectionCaps caps;
  int max_components = 10;
  int top = 15;
  int jobs = 1;
  RunOptions run;

  // Empty when valid, else a message.
  std::string validate() const;
  // Effective settings, echoed in reports.
  std::vector<std::pair<std::string, std::string>> describe() const;
};

// Applies the recognized keys of a corpus config (seed, tests, max_steps,
// targets, alpha, beta, gamma, max_components, top, jobs, step_budget,
// max_passing, max_failing). Throws std::runtime_error on bad values.
void apply_config(SessionConfig& config, const ConfigFile& file);

// Throws CdlError or std::runtime_error.
Program load_program(const std::string& path);

// The suite file when configured, else a freshly generated suite.
TestSuite obtain_suite(const Program& program, const SessionConfig& config);

// Verdict counts and the fault keys with their failing-test counts.
void write_test_summary(std::ostream& out, const Program& program, const TestSuite& suite);

struct LocalizeOutcome {
  FaultInputs inputs;
  Localization localization;
};

// Throws std::runtime_error when the suite has no failing test for `fault`
// or the fault is a call on Void.
LocalizeOutcome run_localization(const Program& program, const TestSuite& suite,
                                 const FaultKey& fault, const SessionConfig& config);

struct FixOutcome {
  LocalizeOutcome localized;
  std::vector<FixCandidate> candidates;
  std::vector<ValidationVerdict> verdicts;
  FixReport report;  // points into `candidates`
};

FixOutcome run_fix(const Program& program, const TestSuite& suite, const FaultKey& fault,
                   const SessionConfig& config);

}  // namespace confix

#endif  // CONFIX_SESSION_SESSION_HPP_
