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

#include "confix/runtime/value.hpp"

namespace confix {

Value Value::Default(const Type& type) {
  switch (type.kind) {
    case TypeKind::kInteger:
      return Int(0);
    case TypeKind::kBoolean:
      return Bool(false);
    default:
      return Void();
  }
}

std::string to_string(const Value& value) {
  switch (value.kind) {
    case ValueKind::kInt:
      return std::to_string(value.int_value);
    case ValueKind::kBool:
      return value.bool_value ? "True" : "False";
    case ValueKind::kRef:
      return "#" + std::to_string(value.ref);
    case ValueKind::kVoid:
      break;
  }
  return "Void";
}

int Heap::allocate(int class_index, std::vector<Value> fields) {
  if (objects_.use_count() > 1) objects_ = std::make_shared<Table>(*objects_);
  objects_->push_back(std::make_shared<Object>(Object{class_index, std::move(fields)}));
  return static_cast<int>(objects_->size()) - 1;
}

void Heap::set_field(int id, int field, const Value& value) {
  if (at(id).fields.at(static_cast<std::size_t>(field)) == value) return;
  if (objects_.use_count() > 1) objects_ = std::make_shared<Table>(*objects_);
  auto& slot = (*objects_)[static_cast<std::size_t>(id)];
  if (slot.use_count() > 1) slot = std::make_shared<Object>(*slot);
  slot->fields[static_cast<std::size_t>(field)] = value;
}

}  // namespace confix
