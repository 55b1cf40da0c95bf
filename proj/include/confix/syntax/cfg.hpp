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

#ifndef CONFIX_SYNTAX_CFG_HPP_
#define CONFIX_SYNTAX_CFG_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "confix/syntax/ast.hpp"

namespace confix {

// Control-flow graph over the statement locations of one routine. Nodes are
// 1..node_count; with an exit node, node_count is the routine's exit location.
class ControlFlowGraph {
 public:
  ControlFlowGraph(RoutineRef routine, int node_count, int entry,
                   std::vector<std::pair<int, int>> edges);

  RoutineRef routine() const { return routine_; }
  int node_count() const { return node_count_; }
  // First location executed on entry, or 0 for an empty graph.
  int entry() const { return entry_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& successors(int node) const { return succ_.at(node); }
  bool has_edge(int from, int to) const;

  // Shortest directed path length, nullopt when `to` is unreachable.
  std::optional<int> distance(int from, int to) const;
  // distance(l, to) for every node l (index 0 unused).
  std::vector<std::optional<int>> distances_to(int to) const;

 private:
  RoutineRef routine_;
  int node_count_;
  int entry_;
  std::vector<std::pair<int, int>> edges_;  // sorted, unique
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
};

// Requires assigned locations. `include_exit` adds the synthetic exit node,
// reached from every location that can end the body.
ControlFlowGraph build_cfg(const RoutineDecl& routine, RoutineRef ref = {},
                           bool include_exit = false);

}  // namespace confix

#endif  // CONFIX_SYNTAX_CFG_HPP_
