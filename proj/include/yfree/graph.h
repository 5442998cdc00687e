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

#ifndef YFREE_GRAPH_H_
#define YFREE_GRAPH_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace yfree {

using Vertex = int;

// An undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Thrown when a graph would violate simplicity (loops, parallel edges) or
// reference a vertex outside [0, n).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on the dense vertex set {0, ..., n-1}.
//
// Values are immutable once constructed. Adjacency lists are kept sorted, and
// edges() returns the edge set in lexicographic order, so two graphs compare
// equal iff they have the same order and the same labeled edge set.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  // Throws GraphError on a loop, a repeated edge or an out-of-range endpoint.
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Vertex>& neighbors(Vertex v) const {
    return adjacency_[v];
  }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<Edge>& edges() const { return edges_; }

  // Subgraph induced by `vertices`; vertex vertices[i] becomes i.
  Graph Induced(std::span<const Vertex> vertices) const;
  // Graph with the same edges plus `extra` (which must be new).
  Graph WithEdges(std::span<const Edge> extra) const;
  // Relabel so that vertex v becomes perm[v].
  Graph Permuted(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

// A few named graphs that show up throughout the tests and tools.
Graph PathGraph(int order);
Graph CycleGraph(int order);
Graph CompleteGraph(int order);
Graph StarGraph(int leaves);  // K_{1,leaves}, center 0
Graph CompleteBipartite(int a, int b);
// The subdivided claw: center 0, legs 0-1-2, 0-3-4, 0-5-6.
Graph SubdividedClaw();

// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> ConnectedComponents(const Graph& g);
bool IsConnected(const Graph& g);

bool IsTree(const Graph& g);
// True iff g is a tree and deleting its leaves leaves a (possibly empty) path.
bool IsCaterpillar(const Graph& g);

std::string DescribeEdges(const Graph& g);

}  // namespace yfree

#endif  // YFREE_GRAPH_H_
