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

#ifndef CONFIX_TESTS_TEST_UTIL_HPP_
#define CONFIX_TESTS_TEST_UTIL_HPP_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "confix/runtime/test_case.hpp"
#include "confix/syntax/ast.hpp"
#include "confix/syntax/parser.hpp"

namespace confix::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(CONFIX_CORPUS_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline Program load_corpus(const std::string& name) {
  return parse_program(read_file(corpus_path(name)));
}

inline RoutineRef routine_ref(const Program& p, const std::string& qualified) {
  auto r = p.parse_routine_name(qualified);
  if (!r) throw std::runtime_error("no routine " + qualified);
  return *r;
}

inline TestStep create(const std::string& var, const std::string& cls, const std::string& proc,
                       std::vector<TestArg> args = {}) {
  return {TestStep::Kind::kCreate, var, cls, proc, std::move(args)};
}

inline TestStep invoke(const std::string& var, const std::string& routine,
                       std::vector<TestArg> args = {}) {
  return {TestStep::Kind::kInvoke, var, {}, routine, std::move(args)};
}

// A set holding three elements, cursor moved to `cursor`, then move_item (e2).
inline TestCase move_item_test(int cursor, const std::string& id = "t") {
  TestCase t;
  t.id = id;
  t.steps = {create("s", "SORTED_SET", "make"), create("e1", "ELEMENT", "make"),
             create("e2", "ELEMENT", "make"),   create("e3", "ELEMENT", "make"),
             invoke("s", "extend", {TestArg::Var("e1")}),
             invoke("s", "extend", {TestArg::Var("e2")}),
             invoke("s", "extend", {TestArg::Var("e3")}),
             invoke("s", "go_i_th", {TestArg::Int(cursor)}),
             invoke("s", "move_item", {TestArg::Var("e2")})};
  return t;
}

}  // namespace confix::testing

#endif  // CONFIX_TESTS_TEST_UTIL_HPP_
