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

#include "confix/syntax/cfg.hpp"

#include <algorithm>
#include <deque>

namespace confix {

namespace {

// Location where control enters a block whose successor is `next`.
int first_of(const std::vector<Stmt>& block, int next);

int first_of(const Stmt& s) {
  if (s.kind == StmtKind::kLoop) return first_of(s.init_part, s.location);
  return s.location;
}

int first_of(const std::vector<Stmt>& block, int next) {
  return block.empty() ? next : first_of(block.front());
}

// `next` is 0 when control leaves the body without an exit node.
void wire(const std::vector<Stmt>& block, int next, std::vector<std::pair<int, int>>& edges) {
  auto edge = [&](int from, int to) {
    if (to != 0) edges.emplace_back(from, to);
  };
  for (std::size_t i = 0; i < block.size(); ++i) {
    const Stmt& s = block[i];
    const int after = i + 1 < block.size() ? first_of(block[i + 1]) : next;
    switch (s.kind) {
      case StmtKind::kIf:
        edge(s.location, first_of(s.then_part, after));
        edge(s.location, first_of(s.else_part, after));
        wire(s.then_part, after, edges);
        wire(s.else_part, after, edges);
        break;
      case StmtKind::kLoop:
        wire(s.init_part, s.location, edges);
        edge(s.location, after);
        edge(s.location, first_of(s.loop_part, s.location));
        wire(s.loop_part, s.location, edges);
        break;
      default:
        edge(s.location, after);
        break;
    }
  }
}

}  // namespace

ControlFlowGraph::ControlFlowGraph(RoutineRef routine, int node_count, int entry,
                                   std::vector<std::pair<int, int>> edges)
    : routine_(routine), node_count_(node_count), entry_(entry), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  succ_.resize(node_count_ + 1);
  pred_.resize(node_count_ + 1);
  for (auto [a, b] : edges_) {
    succ_[a].push_back(b);
    pred_[b].push_back(a);
  }
}

bool ControlFlowGraph::has_edge(int from, int to) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{from, to});
}

std::vector<std::optional<int>> ControlFlowGraph::distances_to(int to) const {
  std::vector<std::optional<int>> dist(node_count_ + 1);
  if (to < 1 || to > node_count_) return dist;
  dist[to] = 0;
  std::deque<int> queue{to};
  while (!queue.empty()) {
    const int n = queue.front();
    queue.pop_front();
    for (int p : pred_[n]) {
      if (!dist[p]) {
        dist[p] = *dist[n] + 1;
        queue.push_back(p);
      }
    }
  }
  return dist;
}

std::optional<int> ControlFlowGraph::distance(int from, int to) const {
  if (from < 1 || from > node_count_) return std::nullopt;
  return distances_to(to)[from];
}

ControlFlowGraph build_cfg(const RoutineDecl& routine, RoutineRef ref, bool include_exit) {
  const int exit = include_exit ? routine.exit_location() : 0;
  std::vector<std::pair<int, int>> edges;
  wire(routine.body, exit, edges);
  const int nodes = include_exit ? exit : routine.location_count;
  return ControlFlowGraph(ref, nodes, first_of(routine.body, exit), std::move(edges));
}

}  // namespace confix
