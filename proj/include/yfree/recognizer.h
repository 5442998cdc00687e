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


// Decides Y-freeness of a connected graph and, when it is Y-free, produces a
// structure certificate in terms of the input's own vertex ids.
//
// The search for a certificate is direct rather than proof-driven: contract
// leaf clone classes and accept a kernel of at most six vertices; otherwise
// strip the pendant vertices and read beads off the block structure (strands)
// or off the common-neighborhood pattern of a 2-connected remainder
// (necklaces). Every certificate is checked with VerifyCertificate before it
// is returned.

#ifndef YFREE_RECOGNIZER_H_
#define YFREE_RECOGNIZER_H_

#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "yfree/certificate.h"
#include "yfree/graph.h"
#include "yfree/y_oracle.h"

namespace yfree {

struct LeafContraction {
  Graph kernel;
  // kernel_to_host[k] is the host vertex kept as kernel vertex k.
  std::vector<Vertex> kernel_to_host;
  // Kept representative (smallest id) -> its whole leaf class, ascending.
  // Every leaf of the input appears in exactly one class.
  std::map<Vertex, std::vector<Vertex>> classes;
};

// Groups the leaves of g by their unique neighbor and keeps the smallest leaf
// of each group.
LeafContraction ContractLeafClones(const Graph& g);

// Reads h as a single bead whose primaries include every vertex of `attach`
// (at most two). Among several readings the lexicographically smallest
// primary set wins. Vertex ids in the result are those of h.
std::optional<BeadInstance> ClassifyBlock(const Graph& h,
                                          std::span<const Vertex> attach);

std::optional<SpikedStrandCert> ParseStrand(const Graph& g);
std::optional<SpikedNecklaceCert> ParseNecklace(const Graph& g);

struct RecognitionResult {
  std::variant<YWitness, Certificate> value;

  bool contains_y() const { return value.index() == 0; }
  const YWitness& witness() const { return std::get<YWitness>(value); }
  const Certificate& certificate() const {
    return std::get<Certificate>(value);
  }
};

// Throws GraphError for an empty or disconnected graph; callers handle each
// component separately. Throws std::logic_error if a Y-free graph receives no
// certificate, which would contradict the characterization.
RecognitionResult Recognize(const Graph& g);

}  // namespace yfree

#endif  // YFREE_RECOGNIZER_H_
