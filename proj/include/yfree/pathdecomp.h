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


// Path decompositions built from certificates, and a checker that knows
// nothing about how they were built.

#ifndef YFREE_PATHDECOMP_H_
#define YFREE_PATHDECOMP_H_

#include <optional>
#include <vector>

#include "yfree/certificate.h"
#include "yfree/graph.h"

namespace yfree {

struct PathDecomposition {
  std::vector<std::vector<Vertex>> bags;

  // Largest bag size minus one; -1 when there are no nonempty bags.
  int width() const;
};

// Decomposition of Realize(cert). Widths: at most 3 for strands and
// necklaces, at most 2 for strands without a K4 bead, at most
// (kernel order - 1) <= 5 for kernel-clone certificates.
//
//   * Strand: beads left to right. K4 is one bag; K211 with primaries v, w
//     and secondaries c, d is {v,c,d},{c,d,w}; K11t and K2t give
//     {v,w,s} per secondary s ({v,w} when there is none). Each spike is a
//     bag {primary, leaf} placed where the chain passes that primary.
//   * Necklace: cut the ring at its first primary, lay the beads out as a
//     strand and add that primary to every bag.
//   * Kernel: one bag holding the kernel; clones hanging from kernel vertex
//     u_j (j in the first half) sit to its left in bags {u_1..u_j, clone},
//     the rest to its right in bags {u_j..u_k, clone}.
//
// Throws CertificateError for an invalid certificate.
PathDecomposition Decompose(const Certificate& cert);

struct DecompositionReport {
  std::optional<int> width;  // set iff there are no violations
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks bag entries are in range and not repeated within a bag, every
// vertex lies in some bag, every edge lies inside some bag, and the bags
// holding any one vertex are consecutive. Tags: vertex-out-of-range,
// duplicate-in-bag, vertex-missing, edge-uncovered, non-contiguous.
DecompositionReport VerifyDecomposition(const Graph& g,
                                        const PathDecomposition& pd);

}  // namespace yfree

#endif  // YFREE_PATHDECOMP_H_
