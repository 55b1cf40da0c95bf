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

#ifndef CONFIX_RUNTIME_VALUE_HPP_
#define CONFIX_RUNTIME_VALUE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "confix/syntax/ast.hpp"

namespace confix {

enum class ValueKind { kInt, kBool, kRef, kVoid };

struct Value {
  ValueKind kind = ValueKind::kVoid;
  std::int64_t int_value = 0;
  bool bool_value = false;
  int ref = -1;

  static Value Int(std::int64_t v) { return {ValueKind::kInt, v, false, -1}; }
  static Value Bool(bool v) { return {ValueKind::kBool, 0, v, -1}; }
  static Value Ref(int id) { return {ValueKind::kRef, 0, false, id}; }
  static Value Void() { return {}; }
  // Default value of an attribute, local or Result of the given type.
  static Value Default(const Type& type);

  bool is_void() const { return kind == ValueKind::kVoid; }
  friend bool operator==(const Value&, const Value&) = default;
};

std::string to_string(const Value& value);

struct Object {
  int class_index = -1;
  std::vector<Value> fields;  // parallel to ClassDecl::attributes
};

// Object store with copy-on-write sharing: copying a Heap is O(1) and later
// writes through either copy never affect the other.
class Heap {
 public:
  Heap() : objects_(std::make_shared<Table>()) {}

  int allocate(int class_index, std::vector<Value> fields);
  const Object& at(int id) const { return *(*objects_).at(static_cast<std::size_t>(id)); }
  void set_field(int id, int field, const Value& value);
  int size() const { return static_cast<int>(objects_->size()); }

 private:
  using Table = std::vector<std::shared_ptr<Object>>;
  std::shared_ptr<Table> objects_;
};

}  // namespace confix

#endif  // CONFIX_RUNTIME_VALUE_HPP_
