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


// Seeded synthesis of Y-free graphs together with their certificates.
//
// Programs are sampled loosely (geometric bead counts, uniform bead kinds and
// t values, truncated Poisson spike counts) and then repaired to the exact
// requested order. The distribution over graphs is not uniform.

#ifndef YFREE_GENERATOR_H_
#define YFREE_GENERATOR_H_

#include <cstdint>
#include <random>
#include <stdexcept>

#include "yfree/certificate.h"
#include "yfree/graph.h"

namespace yfree {

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Shape { kAny, kStrand, kNecklace, kKernel };

struct GeneratorParams {
  int n_target = 8;
  Shape shape = Shape::kAny;
  bool allow_k4 = true;
  // Upper bound on the secondaries of any bead, so K2t and K211 need
  // max_t >= 2 and K4 needs max_t >= 3 (and allow_k4).
  int max_t = 4;
  // Upper bound on spikes per primary.
  int max_spikes = 2;
};

// Deterministic across platforms: only the raw mt19937_64 stream is used, and
// every derived draw is computed here rather than by <random> distributions,
// whose algorithms are implementation-defined.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform on [lo, hi]; requires lo <= hi.
  int UniformInt(int lo, int hi);
  // Uniform on [0, 1).
  double UniformReal();
  bool Bernoulli(double p) { return UniformReal() < p; }
  // Failures before the first success, capped at `cap`.
  int Geometric(double p, int cap);
  // Poisson(lambda), capped at `cap`.
  int Poisson(double lambda, int cap);

 private:
  std::mt19937_64 engine_;
};

// A valid certificate realizing to exactly params.n_target vertices.
// Identical seed and params give identical output. Throws GeneratorError when
// the requested shape has no member of that order: n_target < 1, a strand
// below order 2 or a necklace below order 3.
Certificate RandomCertificate(std::uint64_t seed, const GeneratorParams& params);

// Spine path 0 - 1 - ... - spine_length, plus one vertex adjacent to both
// ends of spine edge i for every set bit i of triangle_mask; extra vertices
// are numbered after the spine in increasing bit order.
// Throws GeneratorError if spine_length < 1, spine_length > 62, or the mask
// has bits at or above spine_length.
Graph ThickCaterpillar(int spine_length, std::uint64_t triangle_mask);

// The same graph as a strand of K11t(0) and K11t(1) beads, with identical ids.
Certificate ThickCaterpillarCertificate(int spine_length,
                                        std::uint64_t triangle_mask);

}  // namespace yfree

#endif  // YFREE_GENERATOR_H_
