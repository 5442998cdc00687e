// Copyright 2026 The yfree Authors
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

#include "yfree/blocks.h"

#include <algorithm>

namespace yfree {

std::vector<int> BlockDecomposition::BlocksOf(Vertex v) const {
  std::vector<int> result;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    if (std::binary_search(blocks[b].begin(), blocks[b].end(), v)) {
      result.push_back(b);
    }
  }
  return result;
}

BlockDecomposition BlocksAndCutVertices(const Graph& g) {
  BlockDecomposition result;
  const int n = g.order();
  if (n == 0) return result;
  if (!IsConnected(g)) {
    throw GraphError("block decomposition needs a connected graph");
  }
  if (n == 1) {
    result.blocks.push_back({0});
    return result;
  }

  // Iterative Hopcroft-Tarjan with an explicit edge stack.
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<bool> is_cut(n, false);
  int timer = 0;

  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  int root_children = 0;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    const auto& nbrs = g.neighbors(v);
    if (next_child[v] < nbrs.size()) {
      const Vertex w = nbrs[next_child[v]++];
      if (disc[w] < 0) {
        parent[w] = v;
        disc[w] = low[w] = timer++;
        edge_stack.emplace_back(v, w);
        if (v == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v] && disc[w] < disc[v]) {
        low[v] = std::min(low[v], disc[w]);
        edge_stack.emplace_back(v, w);
      }
      continue;
    }
    stack.pop_back();
    const Vertex p = parent[v];
    if (p < 0) continue;
    low[p] = std::min(low[p], low[v]);
    if (low[v] >= disc[p]) {
      if (p != 0) is_cut[p] = true;
      std::vector<Vertex> block;
      const Edge closing(p, v);
      while (true) {
        const Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e.u);
        block.push_back(e.v);
        if (e == closing) break;
      }
      std::sort(block.begin(), block.end());
      block.erase(std::unique(block.begin(), block.end()), block.end());
      result.blocks.push_back(std::move(block));
    }
  }
  if (root_children > 1) is_cut[0] = true;

  std::sort(result.blocks.begin(), result.blocks.end());
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) result.cut_vertices.push_back(v);
  }
  for (int b = 0; b < static_cast<int>(result.blocks.size()); ++b) {
    for (Vertex v : result.blocks[b]) {
      if (is_cut[v]) result.block_cut_edges.emplace_back(b, v);
    }
  }
  return result;
}

}  // namespace yfree
