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

// Ground truth for "does G contain the subdivided claw Y?", computed without
// any knowledge of the structure of Y-free graphs.

#ifndef YFREE_Y_ORACLE_H_
#define YFREE_Y_ORACLE_H_

#include <array>
#include <optional>

#include "yfree/canonical.h"
#include "yfree/graph.h"

namespace yfree {

// An embedded subdivided claw: legs center - mids[i] - ends[i].
struct YWitness {
  Vertex center = 0;
  std::array<Vertex, 3> mids{};
  std::array<Vertex, 3> ends{};

  friend bool operator==(const YWitness&, const YWitness&) = default;
};

// True iff the seven vertices are distinct and all six leg edges are in g.
bool IsValidWitness(const Graph& g, const YWitness& w);

// Deterministic: centers in increasing order, mid triples in lexicographic
// order, and for each triple the lexicographically smallest distinct ends.
std::optional<YWitness> FindYSubgraph(const Graph& g);

// Same answer as FindYSubgraph(g).has_value(), on adjacency bitmasks and
// without building a witness. Used by the exhaustive censuses.
bool ContainsY(const SmallGraph& g);

inline constexpr int kMinorSearchBound = 9;

// Exhaustive search down the minor order (edge deletions and contractions,
// dropping components too small to host Y), memoized on canonical forms.
// Throws OrderBoundError when n > kMinorSearchBound.
bool HasYMinorBruteforce(const Graph& g);

}  // namespace yfree

#endif  // YFREE_Y_ORACLE_H_
