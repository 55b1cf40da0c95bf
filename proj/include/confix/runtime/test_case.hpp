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

#ifndef CONFIX_RUNTIME_TEST_CASE_HPP_
#define CONFIX_RUNTIME_TEST_CASE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace confix {

struct TestArg {
  enum class Kind { kInt, kBool, kVoid, kVar };
  Kind kind = Kind::kVoid;
  std::int64_t int_value = 0;
  bool bool_value = false;
  std::string var;

  static TestArg Int(std::int64_t v) { return {Kind::kInt, v, false, {}}; }
  static TestArg Bool(bool v) { return {Kind::kBool, 0, v, {}}; }
  static TestArg Void() { return {}; }
  static TestArg Var(std::string name) { return {Kind::kVar, 0, false, std::move(name)}; }
  friend bool operator==(const TestArg&, const TestArg&) = default;
};

// One driver action: `create v: CLASS.proc (args)` or `v.routine (args)`.
struct TestStep {
  enum class Kind { kCreate, kInvoke };
  Kind kind = Kind::kInvoke;
  std::string var;
  std::string class_name;  // kCreate only
  std::string routine;     // creation procedure or invoked routine
  std::vector<TestArg> args;
  friend bool operator==(const TestStep&, const TestStep&) = default;
};

struct TestCase {
  std::string id;
  std::vector<TestStep> steps;
  friend bool operator==(const TestCase&, const TestCase&) = default;
};

std::string print(const TestArg& arg);
std::string print(const TestStep& step);

}  // namespace confix

#endif  // CONFIX_RUNTIME_TEST_CASE_HPP_
