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


// Censuses of small connected Y-free graphs, computed two independent ways:
// by brute force over every labeled graph (the oracle census), and by
// generating kernels with cloned leaves plus every strand and necklace bead
// program (the structural enumeration). Also labeled counts g_n, finite-n
// growth points (g_n / n!)^(1/n) and the constant delta.

#ifndef YFREE_ENUMERATOR_H_
#define YFREE_ENUMERATOR_H_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "yfree/certificate.h"
#include "yfree/graph.h"

namespace yfree {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kOracleCensusBound = 8;
inline constexpr int kEnumerationBound = 10;

struct CensusRow {
  int n = 0;
  // Known only when the oracle census ran for this n.
  std::optional<std::uint64_t> unlabeled_connected;
  std::uint64_t unlabeled_yfree = 0;
  BigInt labeled_yfree = 0;  // g_n
  double growth_point = 0;   // (g_n / n!)^(1/n)
};

struct OracleCensus {
  int n = 0;
  std::uint64_t labeled_connected = 0;
  std::uint64_t labeled_yfree = 0;
  std::uint64_t unlabeled_connected = 0;
  // Canonical forms of the connected Y-free graphs.
  std::set<std::string> yfree_forms;

  CensusRow row() const;
};

// Walks all 2^(n(n-1)/2) labeled graphs on n vertices, split into `jobs`
// contiguous mask ranges run on separate threads. Throws OrderBoundError for
// n > kOracleCensusBound or n < 1.
OracleCensus RunOracleCensus(int n, int jobs = 1);

// All connected graphs on at most six vertices, one per isomorphism class,
// ordered by (order, canonical form).
const std::vector<Graph>& ConnectedKernels();

// Every valid strand and necklace program realizing to exactly n vertices.
// Necklace rotations and reflections are not removed.
std::vector<BeadProgram> BeadPrograms(int n);

// Canonical forms of all connected Y-free graphs on n vertices, built from
// certificates only. Throws OrderBoundError for n > kEnumerationBound or
// n < 1.
std::set<std::string> EnumerateYFree(int n);

// g_n: labeled connected Y-free graphs on n vertices, as the sum of
// n! / |Aut(G)| over EnumerateYFree(n).
BigInt LabeledCount(int n);
BigInt LabeledCount(int n, const std::set<std::string>& forms);

double GrowthPoint(int n, const BigInt& g_n);

// Rows for n = 1..n_max from the structural enumeration.
std::vector<CensusRow> GrowthEstimate(int n_max);

struct DeltaSolution {
  double z = 0;         // positive root of (z + z^2) e^z = 1
  double delta = 0;     // 1 / z
  double residual = 0;  // |(z + z^2) e^z - 1|
};

// Bisection on [0, 1] to an absolute tolerance of 1e-12; the left side is
// strictly increasing on [0, inf), with value 0 at z = 0 and 2e at z = 1.
DeltaSolution SolveDelta();

}  // namespace yfree

#endif  // YFREE_ENUMERATOR_H_
