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

// Structure certificates for connected Y-free graphs.
//
// A certificate names host vertex ids explicitly, so checking it against a
// graph is a labeled edge-set comparison. Three shapes exist:
//
//   * KernelClones: a connected kernel on at most six vertices, some of whose
//     leaves have been cloned (copies sharing the leaf's single neighbor).
//   * SpikedStrand: beads strung in a path at shared primary vertices, with
//     pendant "spike" edges at primaries lying in two beads.
//   * SpikedNecklace: beads strung in a cycle, spikes at any primary.
//
// Bead kinds, with p = primaries and s = secondaries:
//
//   K4    1 primary, 3 secondaries; all six pairs adjacent.
//   K211  2 nonadjacent primaries, 2 secondaries adjacent to each other and
//         to both primaries.
//   K11t  2 adjacent primaries, t >= 0 secondaries adjacent to both.
//   K2t   2 nonadjacent primaries, t >= 2 secondaries adjacent to both.

#ifndef YFREE_CERTIFICATE_H_
#define YFREE_CERTIFICATE_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "yfree/graph.h"

namespace yfree {

enum class BeadKind { kK4, kK211, kK11t, kK2t };

std::string_view BeadKindName(BeadKind kind);
std::optional<BeadKind> BeadKindFromName(std::string_view name);

struct BeadInstance {
  BeadKind kind = BeadKind::kK11t;
  // Number of secondaries. Fixed at 3 for K4 and 2 for K211.
  int t = 0;
  std::vector<Vertex> primaries;
  std::vector<Vertex> secondaries;

  friend bool operator==(const BeadInstance&, const BeadInstance&) = default;
};

// Primary vertex -> its pendant leaves.
using SpikeMap = std::map<Vertex, std::vector<Vertex>>;

// Beads in chain order; bead i and bead i+1 share exactly one primary.
struct SpikedStrandCert {
  std::vector<BeadInstance> beads;
  SpikeMap spikes;

  friend bool operator==(const SpikedStrandCert&,
                         const SpikedStrandCert&) = default;
};

// Beads in ring order; bead i shares one primary with bead i+1 (mod r).
struct SpikedNecklaceCert {
  std::vector<BeadInstance> beads;
  SpikeMap spikes;

  friend bool operator==(const SpikedNecklaceCert&,
                         const SpikedNecklaceCert&) = default;
};

struct KernelClonesCert {
  Graph kernel;
  // kernel_map[k] is the host id of kernel vertex k.
  std::vector<Vertex> kernel_map;
  // Kernel leaf -> host ids of its whole clone class, starting with
  // kernel_map[leaf]. The multiplicity is the class size. Leaves without an
  // entry have multiplicity one.
  std::map<Vertex, std::vector<Vertex>> clones;

  friend bool operator==(const KernelClonesCert&,
                         const KernelClonesCert&) = default;
};

struct Certificate {
  int n = 0;
  std::variant<KernelClonesCert, SpikedStrandCert, SpikedNecklaceCert> body;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

std::string_view CertificateTypeName(const Certificate& cert);

struct Violation {
  std::string tag;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string DescribeViolations(const std::vector<Violation>& violations);

class CertificateError : public std::invalid_argument {
 public:
  CertificateError(const std::string& what, std::vector<Violation> violations)
      : std::invalid_argument(what), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Every structural rule the certificate breaks. Tags in use:
//   bead-shape, vertex-out-of-range, vertex-reused, vertex-uncovered,
//   empty-strand, aux-not-path, K4-not-at-end, spike-at-end-primary,
//   spike-at-non-primary, empty-spike, short-necklace, K4-in-necklace,
//   two-K11-necklace, aux-not-cycle, kernel-too-large, kernel-disconnected,
//   kernel-map, cloned-non-leaf, clone-class-mismatch,
//   cloned-leaf-neighbor-cloned.
std::vector<Violation> ValidateProgram(const Certificate& cert);

// Edge set described by the certificate, sorted, without validation.
std::vector<Edge> CertificateEdges(const Certificate& cert);

// Throws CertificateError when ValidateProgram reports anything.
Graph Realize(const Certificate& cert);

// Valid certificate whose edge set equals E(g) exactly, with matching order.
bool VerifyCertificate(const Certificate& cert, const Graph& g);

// A strand or necklace before vertex ids are assigned.
struct BeadSpec {
  BeadKind kind = BeadKind::kK11t;
  int t = 0;

  friend bool operator==(const BeadSpec&, const BeadSpec&) = default;
};

struct BeadProgram {
  bool necklace = false;
  std::vector<BeadSpec> beads;
  // Spike count per primary, in chain (or ring) order. Empty means none.
  std::vector<int> spikes;

  friend bool operator==(const BeadProgram&, const BeadProgram&) = default;
};

// Number of primaries in chain or ring order.
int PrimaryCount(const BeadProgram& program);
int ProgramOrder(const BeadProgram& program);

// Assigns ids: primaries in chain order, then secondaries bead by bead, then
// spike leaves primary by primary. The result is not validated.
Certificate Allocate(const BeadProgram& program);

// Identity-mapped kernel with clone multiplicities (kernel vertex -> class
// size >= 1); clone ids follow the kernel ids in kernel-vertex order.
Certificate AllocateKernel(const Graph& kernel,
                           const std::map<Vertex, int>& multiplicity);

}  // namespace yfree

#endif  // YFREE_CERTIFICATE_H_
