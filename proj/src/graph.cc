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

#include "yfree/graph.h"

#include <algorithm>
#include <sstream>

namespace yfree {

Graph::Graph(int order) {
  if (order < 0) throw GraphError("negative vertex count");
  adjacency_.resize(order);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= order) {
      throw GraphError("edge " + std::to_string(e.u) + "-" +
                       std::to_string(e.v) + " out of range for n=" +
                       std::to_string(order));
    }
    if (e.u == e.v) {
      throw GraphError("loop at vertex " + std::to_string(e.u));
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge " + std::to_string(dup->u) + "-" +
                     std::to_string(dup->v));
  }
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adjacency_) {
    best = std::max(best, static_cast<int>(list.size()));
  }
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u]
                                                                 : adjacency_[v];
  const Vertex target = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

Graph Graph::Induced(std::span<const Vertex> vertices) const {
  std::vector<int> index(order(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    index[vertices[i]] = i;
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      kept.emplace_back(index[e.u], index[e.v]);
    }
  }
  return Graph(static_cast<int>(vertices.size()), kept);
}

Graph Graph::WithEdges(std::span<const Edge> extra) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(order(), all);
}

Graph Graph::Permuted(std::span<const int> perm) const {
  std::vector<Edge> moved;
  moved.reserve(edges_.size());
  for (const Edge& e : edges_) moved.emplace_back(perm[e.u], perm[e.v]);
  return Graph(order(), moved);
}

Graph PathGraph(int order) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < order; ++i) edges.emplace_back(i, i + 1);
  return Graph(order, edges);
}

Graph CycleGraph(int order) {
  std::vector<Edge> edges;
  for (int i = 0; i < order; ++i) edges.emplace_back(i, (i + 1) % order);
  return Graph(order, edges);
}

Graph CompleteGraph(int order) {
  std::vector<Edge> edges;
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) edges.emplace_back(i, j);
  }
  return Graph(order, edges);
}

Graph StarGraph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph CompleteBipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(a + b, edges);
}

Graph SubdividedClaw() {
  return Graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
}

std::vector<std::vector<Vertex>> ConnectedComponents(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> seen(g.order(), false);
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> part{start};
    seen[start] = true;
    for (std::size_t head = 0; head < part.size(); ++head) {
      for (Vertex w : g.neighbors(part[head])) {
        if (!seen[w]) {
          seen[w] = true;
          part.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    components.push_back(std::move(part));
  }
  return components;
}

bool IsConnected(const Graph& g) {
  return ConnectedComponents(g).size() <= 1;
}

bool IsTree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == static_cast<std::size_t>(g.order()) &&
         IsConnected(g);
}

bool IsCaterpillar(const Graph& g) {
  if (!IsTree(g)) return false;
  // Degrees in the tree with all leaves removed.
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) <= 1) continue;
    int inner = 0;
    for (Vertex w : g.neighbors(v)) inner += g.degree(w) > 1 ? 1 : 0;
    if (inner > 2) return false;
  }
  return true;
}

std::string DescribeEdges(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " {";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) out << ",";
    out << g.edges()[i].u << "-" << g.edges()[i].v;
  }
  out << "}";
  return out.str();
}

}  // namespace yfree
