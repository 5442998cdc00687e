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


// Brute-force spot checks of the structure forced on a connected Y-free graph
// by a longest path P = v_0 ... v_l. With L_i = N(v_i) - V(P):
//
//   ends-empty             L_0 and L_l are empty.
//   adjacent-disjoint      L_i and L_{i+1} are disjoint.
//   outside-independent    no edge has both ends off P.
//   path-dominating        every vertex off P lies in some L_i.
//
// and, when l >= 5:
//
//   intersection-pattern   L_i meets L_j (i < j) only if j = i + 2 or
//                          (i, j) = (1, l - 1).
//   triple-empty           no vertex lies in three of the L_i.
//   vee-pendant            never L_i nonempty while L_{i-1} meets L_{i+1}.
//   vees-no-cross          no vee v_i w v_{i+2} alongside a distinct vee
//                          with endpoint v_{i+1}.
//   possible-chords        every chord is v_i v_{i+2}, v_0 v_3, v_{l-3} v_l,
//                          or joins {v_0, v_1} to {v_{l-1}, v_l}.
//   edge-dominating-cycle  if a chord joins {v_0, v_1} to {v_{l-1}, v_l} or
//                          L_1 meets L_{l-1}, some cycle of length at least
//                          max(l - 1, 4) touches every edge.

#ifndef YFREE_PROOFLAB_H_
#define YFREE_PROOFLAB_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "yfree/graph.h"

namespace yfree {

// Exhaustive path and cycle search on arbitrary graphs.
inline constexpr int kProofLabBound = 12;
// Lemma checks run on Y-free graphs only, where the searches stay small.
inline constexpr int kLemmaCheckBound = 24;

struct LongestPath {
  std::vector<Vertex> vertices;
  // deg(v_0) + deg(v_l) is smallest among all longest paths.
  bool degree_sum_minimal = false;
};

// Every maximum-length simple path, once per direction, in lexicographic
// order of the vertex sequence. K1 gives the single path {0}.
// Throws OrderBoundError when n > kProofLabBound.
std::vector<LongestPath> LongestPathsBruteforce(const Graph& g);

// A longest cycle whose vertex set meets every edge, or nullopt when there
// is none. The cycle starts at its smallest vertex and continues to the
// smaller of its two neighbors on the cycle; ties between cycles of equal
// length go to the lexicographically smallest such sequence.
// Throws OrderBoundError when n > kProofLabBound.
std::optional<std::vector<Vertex>> MaxEdgeDominatingCycle(const Graph& g);

// The input has a Y subgraph, so the lemmas say nothing about it.
class LemmaHypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class LemmaStatus { kPass, kFail, kNotApplicable };

std::string_view LemmaStatusName(LemmaStatus status);

struct LemmaResult {
  std::string id;
  LemmaStatus status = LemmaStatus::kNotApplicable;
  // Number of paths on which the statement was evaluated.
  int paths_checked = 0;
  // The first counterexample found, empty on pass.
  std::string witness;
};

struct LemmaReport {
  int path_length = 0;
  // The degree-sum-minimal longest paths every lemma was evaluated on.
  std::vector<std::vector<Vertex>> paths;
  // Fixed order, as listed at the top of this file.
  std::vector<LemmaResult> lemmas;

  bool all_passed() const;
};

// Throws GraphError for an empty or disconnected graph, OrderBoundError when
// n > kLemmaCheckBound and LemmaHypothesisError when g contains Y.
LemmaReport CheckStructuralLemmas(const Graph& g);

}  // namespace yfree

#endif  // YFREE_PROOFLAB_H_
