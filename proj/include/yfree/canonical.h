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

// Isomorphism invariants for small graphs.
//
// Both routines start from the degree partition, refine it to an equitable
// partition and backtrack over individualizations of the first non-singleton
// cell. Swapping two twins (vertices with N(u)-v == N(v)-u) is always an
// automorphism, so only one twin per cell is ever individualized; this keeps
// stars, complete graphs and clone-heavy graphs linear instead of factorial.

#ifndef YFREE_CANONICAL_H_
#define YFREE_CANONICAL_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "yfree/graph.h"

namespace yfree {

inline constexpr int kCanonicalBound = 16;
inline constexpr int kSmallGraphCapacity = 32;

class OrderBoundError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Adjacency bitmasks for graphs with at most kSmallGraphCapacity vertices.
struct SmallGraph {
  int n = 0;
  std::array<std::uint32_t, kSmallGraphCapacity> rows{};

  static SmallGraph From(const Graph& g);
  Graph ToGraph() const;
  bool has_edge(int u, int v) const { return (rows[u] >> v) & 1U; }
  void AddEdge(int u, int v) {
    rows[u] |= 1U << v;
    rows[v] |= 1U << u;
  }
};

// graph6 string of the canonical relabeling: equal iff isomorphic.
// Throws OrderBoundError when n > max_order.
std::string CanonicalForm(const Graph& g, int max_order = kCanonicalBound);
std::string CanonicalForm(const SmallGraph& g, int max_order = kCanonicalBound);

// perm[v] is the canonical label of v.
std::vector<int> CanonicalLabeling(const Graph& g,
                                   int max_order = kCanonicalBound);

// Order of the automorphism group, via orbit-stabilizer along a chain of
// individualized vertices. Throws OrderBoundError when n > max_order.
std::uint64_t AutomorphismCount(const Graph& g,
                                int max_order = kCanonicalBound);

}  // namespace yfree

#endif  // YFREE_CANONICAL_H_
