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

#ifndef YFREE_BLOCKS_H_
#define YFREE_BLOCKS_H_

#include <utility>
#include <vector>

#include "yfree/graph.h"

namespace yfree {

struct BlockDecomposition {
  // Vertex sets of the maximal biconnected subgraphs (bridges are 2-vertex
  // blocks), each sorted; blocks are ordered by their sorted vertex lists.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;  // sorted
  // Incidences of the block-cut tree: (block index, cut vertex).
  std::vector<std::pair<int, Vertex>> block_cut_edges;

  // Indices of the blocks containing v.
  std::vector<int> BlocksOf(Vertex v) const;
};

// Standard biconnected decomposition of a connected graph. A single vertex is
// one block. Throws GraphError when g is disconnected.
BlockDecomposition BlocksAndCutVertices(const Graph& g);

}  // namespace yfree

#endif  // YFREE_BLOCKS_H_
