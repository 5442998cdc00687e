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


#include "yfree/generator.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace yfree {

int SeededRng::UniformInt(int lo, int hi) {
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - lo + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = Next();
  } while (x >= limit);
  return lo + static_cast<int>(x % range);
}

double SeededRng::UniformReal() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

int SeededRng::Geometric(double p, int cap) {
  int failures = 0;
  while (failures < cap && !Bernoulli(p)) ++failures;
  return failures;
}

int SeededRng::Poisson(double lambda, int cap) {
  const double floor = std::exp(-lambda);
  int k = 0;
  double product = UniformReal();
  while (product > floor && k < cap) {
    ++k;
    product *= UniformReal();
  }
  return k;
}

namespace {

bool Valid(const BeadProgram& program) {
  return ValidateProgram(Allocate(program)).empty();
}

// Keeps the spike vector aligned with the primaries; spikes are only kept at
// primaries that may carry them.
void FitSpikes(BeadProgram& program) {
  program.spikes.resize(PrimaryCount(program), 0);
  if (program.necklace) return;
  BeadProgram bare = program;
  bare.spikes.clear();
  const Certificate cert = Allocate(bare);
  std::vector<int> beads_at(program.spikes.size(), 0);
  for (const BeadInstance& b : std::get<SpikedStrandCert>(cert.body).beads) {
    for (Vertex p : b.primaries) ++beads_at[p];
  }
  for (std::size_t p = 0; p < beads_at.size(); ++p) {
    if (beads_at[p] != 2) program.spikes[p] = 0;
  }
}

std::vector<int> SpikeablePrimaries(const BeadProgram& program, int cap) {
  BeadProgram probe = program;
  std::vector<int> out;
  for (std::size_t p = 0; p < program.spikes.size(); ++p) {
    if (program.spikes[p] >= cap) continue;
    probe.spikes = program.spikes;
    ++probe.spikes[p];
    if (Valid(probe)) out.push_back(static_cast<int>(p));
  }
  return out;
}

BeadSpec RandomBead(SeededRng& rng, const GeneratorParams& params) {
  std::vector<BeadKind> kinds{BeadKind::kK11t};
  if (params.max_t >= 2) {
    kinds.push_back(BeadKind::kK2t);
    kinds.push_back(BeadKind::kK211);
  }
  const BeadKind kind =
      kinds[rng.UniformInt(0, static_cast<int>(kinds.size()) - 1)];
  switch (kind) {
    case BeadKind::kK11t:
      return {kind, rng.UniformInt(0, std::max(params.max_t, 0))};
    case BeadKind::kK2t:
      return {kind, rng.UniformInt(2, params.max_t)};
    default:
      return {kind, 2};
  }
}

int Order(const BeadProgram& program) { return ProgramOrder(program); }

// One step towards a smaller order; false if no valid step exists.
bool Shrink(BeadProgram& program) {
  for (int p = static_cast<int>(program.spikes.size()) - 1; p >= 0; --p) {
    if (program.spikes[p] > 0) {
      --program.spikes[p];
      return true;
    }
  }
  auto& beads = program.beads;
  for (int i = static_cast<int>(beads.size()) - 1; i >= 0; --i) {
    BeadSpec& b = beads[i];
    if ((b.kind == BeadKind::kK11t && b.t > 0) ||
        (b.kind == BeadKind::kK2t && b.t > 2)) {
      BeadProgram next = program;
      --next.beads[i].t;
      if (Valid(next)) {
        program = std::move(next);
        return true;
      }
    }
  }
  for (int i = static_cast<int>(beads.size()) - 1; i >= 0; --i) {
    if (beads[i].kind == BeadKind::kK11t) continue;
    BeadProgram next = program;
    next.beads[i] = {BeadKind::kK11t, 0};
    FitSpikes(next);
    if (Valid(next) && Order(next) < Order(program)) {
      program = std::move(next);
      return true;
    }
  }
  if (beads.size() > 1) {
    BeadProgram next = program;
    next.beads.pop_back();
    FitSpikes(next);
    if (Valid(next)) {
      program = std::move(next);
      return true;
    }
  }
  return false;
}

// One step adding exactly one vertex.
void Grow(SeededRng& rng, const GeneratorParams& params, BeadProgram& program) {
  const int cap = std::max(params.max_spikes, 0);
  if (rng.Bernoulli(0.5)) {
    for (int i = static_cast<int>(program.beads.size()) - 1; i >= 0; --i) {
      BeadSpec& b = program.beads[i];
      if ((b.kind == BeadKind::kK11t || b.kind == BeadKind::kK2t) &&
          b.t < params.max_t) {
        BeadProgram next = program;
        ++next.beads[i].t;
        if (Valid(next)) {
          program = std::move(next);
          return;
        }
      }
    }
  }
  if (rng.Bernoulli(0.5)) {
    const std::vector<int> open = SpikeablePrimaries(program, cap);
    if (!open.empty()) {
      ++program.spikes[open[rng.UniformInt(0, static_cast<int>(open.size()) -
                                                   1)]];
      return;
    }
  }
  // A new K11t(0) bead always adds exactly one primary. In a strand ending
  // with K4 it goes just before that K4; either way the new primary is last
  // in chain order.
  BeadProgram next = program;
  auto& beads = next.beads;
  const BeadSpec edge{BeadKind::kK11t, 0};
  if (!next.necklace && beads.size() >= 2 &&
      beads.back().kind == BeadKind::kK4) {
    beads.insert(beads.end() - 1, edge);
  } else {
    beads.push_back(edge);
  }
  next.spikes.push_back(0);
  FitSpikes(next);
  program = std::move(next);
}

BeadProgram PlainProgram(bool necklace, int n) {
  BeadProgram program;
  program.necklace = necklace;
  const int beads = necklace ? n : n - 1;
  program.beads.assign(beads, BeadSpec{BeadKind::kK11t, 0});
  FitSpikes(program);
  return program;
}

Certificate RandomBeadCertificate(SeededRng& rng, const GeneratorParams& params,
                                  bool necklace) {
  const int n = params.n_target;
  BeadProgram program;
  program.necklace = necklace;
  const int r = necklace ? 2 + rng.Geometric(0.35, n - 2)
                         : 1 + rng.Geometric(0.35, n - 2);
  for (int i = 0; i < r; ++i) program.beads.push_back(RandomBead(rng, params));
  if (!necklace && params.allow_k4 && params.max_t >= 3) {
    if (rng.Bernoulli(0.15)) program.beads.front() = {BeadKind::kK4, 3};
    if (rng.Bernoulli(0.15)) program.beads.back() = {BeadKind::kK4, 3};
  }
  if (necklace && r == 2 && program.beads[0].kind == BeadKind::kK11t &&
      program.beads[1].kind == BeadKind::kK11t) {
    program.beads.push_back({BeadKind::kK11t, 0});
  }
  FitSpikes(program);
  for (int& s : program.spikes) {
    s = rng.Poisson(0.6, std::max(params.max_spikes, 0));
  }
  FitSpikes(program);

  if (!Valid(program)) program = PlainProgram(necklace, n);
  while (Order(program) > n) {
    if (!Shrink(program)) {
      program = PlainProgram(necklace, n);
      break;
    }
  }
  while (Order(program) < n) Grow(rng, params, program);
  return Allocate(program);
}

// Random connected graph on k vertices.
Graph RandomConnected(SeededRng& rng, int k) {
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < k; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Edge> edges;
    for (const Edge& e : pairs) {
      if (rng.Bernoulli(0.5)) edges.push_back(e);
    }
    Graph g(k, edges);
    if (IsConnected(g)) return g;
  }
  return PathGraph(k);
}

Certificate RandomKernelCertificate(SeededRng& rng, int n) {
  if (n <= 6) return AllocateKernel(RandomConnected(rng, n), {});
  const int k = rng.UniformInt(2, 6);
  if (k == 2) return AllocateKernel(CompleteGraph(2), {{1, n - 1}});
  const Graph base = RandomConnected(rng, k - 1);
  std::vector<Edge> edges = base.edges();
  edges.emplace_back(rng.UniformInt(0, k - 2), k - 1);
  const Graph kernel(k, edges);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < k; ++v) {
    if (kernel.degree(v) == 1) leaves.push_back(v);
  }
  std::map<Vertex, int> multiplicity;
  for (int extra = 0; extra < n - k; ++extra) {
    const Vertex leaf =
        leaves[rng.UniformInt(0, static_cast<int>(leaves.size()) - 1)];
    auto [it, inserted] = multiplicity.emplace(leaf, 1);
    ++it->second;
  }
  return AllocateKernel(kernel, multiplicity);
}

}  // namespace

Certificate RandomCertificate(std::uint64_t seed, const GeneratorParams& params) {
  const int n = params.n_target;
  if (n < 1) throw GeneratorError("n_target must be at least 1");
  SeededRng rng(seed);
  Shape shape = params.shape;
  if (shape == Shape::kAny) {
    std::vector<Shape> options{Shape::kKernel};
    if (n >= 2) options.push_back(Shape::kStrand);
    if (n >= 3) options.push_back(Shape::kNecklace);
    shape = options[rng.UniformInt(0, static_cast<int>(options.size()) - 1)];
  }
  switch (shape) {
    case Shape::kStrand:
      if (n < 2) throw GeneratorError("a strand has at least 2 vertices");
      return RandomBeadCertificate(rng, params, /*necklace=*/false);
    case Shape::kNecklace:
      if (n < 3) throw GeneratorError("a necklace has at least 3 vertices");
      return RandomBeadCertificate(rng, params, /*necklace=*/true);
    default:
      return RandomKernelCertificate(rng, n);
  }
}

Graph ThickCaterpillar(int spine_length, std::uint64_t triangle_mask) {
  if (spine_length < 1 || spine_length > 62) {
    throw GeneratorError("spine length must lie in [1, 62]");
  }
  if ((triangle_mask >> spine_length) != 0) {
    throw GeneratorError("triangle mask has bits beyond the spine");
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < spine_length; ++i) edges.emplace_back(i, i + 1);
  Vertex next = spine_length + 1;
  for (Vertex i = 0; i < spine_length; ++i) {
    if ((triangle_mask >> i) & 1U) {
      edges.emplace_back(i, next);
      edges.emplace_back(i + 1, next);
      ++next;
    }
  }
  return Graph(next, edges);
}

Certificate ThickCaterpillarCertificate(int spine_length,
                                        std::uint64_t triangle_mask) {
  ThickCaterpillar(spine_length, triangle_mask);  // argument checks
  BeadProgram program;
  for (int i = 0; i < spine_length; ++i) {
    program.beads.push_back(
        {BeadKind::kK11t, static_cast<int>((triangle_mask >> i) & 1U)});
  }
  return Allocate(program);
}

}  // namespace yfree
