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

#ifndef CONFIX_TESTGEN_GENERATOR_HPP_
#define CONFIX_TESTGEN_GENERATOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "confix/runtime/interpreter.hpp"
#include "confix/testgen/suite.hpp"

namespace confix {

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int tests = 100;
  int max_steps = 12;
  // Retries of a step whose outcome is `invalid` before giving up on it.
  int attempts_per_step = 8;
  std::vector<std::int64_t> int_pool = {-2, -1, 0, 1, 2, 10};
  // Distinct integer attribute values added to the pool as they are seen.
  int observed_cap = 8;
  // Classes whose routines are invoked; empty means every class.
  std::vector<std::string> target_classes;
  RunOptions run;
};

// Seeded random sequences of creations and invocations over per-class
// object pools. A step that makes the test invalid is rolled back; a test
// ends at its first failure or after max_steps.
TestSuite generate_suite(const Program& program, const GeneratorConfig& config);

}  // namespace confix

#endif  // CONFIX_TESTGEN_GENERATOR_HPP_
