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


#include "yfree/enumerator.h"

#include <bit>
#include <cmath>
#include <map>
#include <thread>

#include "yfree/canonical.h"
#include "yfree/graph_io.h"
#include "yfree/y_oracle.h"

namespace yfree {
namespace {

void CheckRange(int n, int bound, const char* what) {
  if (n < 1 || n > bound) {
    throw OrderBoundError(std::string(what) + " supports 1 <= n <= " +
                          std::to_string(bound) + ", got " +
                          std::to_string(n));
  }
}

bool Connected(const SmallGraph& g) {
  if (g.n == 0) return true;
  const std::uint32_t all = g.n == 32 ? ~0U : (1U << g.n) - 1;
  std::uint32_t seen = 1U;
  std::uint32_t frontier = 1U;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t m = frontier; m != 0; m &= m - 1) {
      next |= g.rows[std::countr_zero(m)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

struct Shard {
  std::uint64_t labeled_connected = 0;
  std::uint64_t labeled_yfree = 0;
  std::set<std::string> connected_forms;
  std::set<std::string> yfree_forms;
};

void RunShard(int n, std::uint64_t begin, std::uint64_t end, Shard& out) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    SmallGraph g;
    g.n = n;
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      const auto [i, j] = pairs[std::countr_zero(m)];
      g.AddEdge(i, j);
    }
    if (!Connected(g)) continue;
    ++out.labeled_connected;
    std::string form = CanonicalForm(g);
    if (!ContainsY(g)) {
      ++out.labeled_yfree;
      out.yfree_forms.insert(form);
    }
    out.connected_forms.insert(std::move(form));
  }
}

BigInt Factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// All ways to write `total` as an ordered sum of `parts` nonnegative terms.
void Compositions(int total, int parts, std::vector<int>& prefix,
                  std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (total == 0) out.push_back(prefix);
    return;
  }
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    prefix.push_back(first);
    Compositions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> Compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  Compositions(total, parts, prefix, out);
  return out;
}

// Primaries that may carry spikes: all of them on a necklace, the ones in
// two beads on a strand.
std::vector<int> SpikeSlots(const BeadProgram& bare) {
  const Certificate cert = Allocate(bare);
  const int primaries = PrimaryCount(bare);
  std::vector<int> beads_at(primaries, 0);
  const auto& beads = bare.necklace
                          ? std::get<SpikedNecklaceCert>(cert.body).beads
                          : std::get<SpikedStrandCert>(cert.body).beads;
  for (const BeadInstance& b : beads) {
    for (Vertex p : b.primaries) ++beads_at[p];
  }
  std::vector<int> slots;
  for (int p = 0; p < primaries; ++p) {
    if (bare.necklace || beads_at[p] == 2) slots.push_back(p);
  }
  return slots;
}

void EmitWithSpikes(const BeadProgram& bare, int n,
                    std::vector<BeadProgram>& out) {
  if (!ValidateProgram(Allocate(bare)).empty()) return;
  const int spare = n - ProgramOrder(bare);
  if (spare < 0) return;
  const std::vector<int> slots = SpikeSlots(bare);
  if (slots.empty()) {
    if (spare == 0) out.push_back(bare);
    return;
  }
  for (const std::vector<int>& split : Compositions(spare, slots.size())) {
    BeadProgram program = bare;
    program.spikes.assign(PrimaryCount(bare), 0);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      program.spikes[slots[i]] = split[i];
    }
    out.push_back(std::move(program));
  }
}

std::vector<BeadSpec> BeadChoices(int max_secondaries, bool with_k4) {
  std::vector<BeadSpec> choices;
  for (int t = 0; t <= max_secondaries; ++t) {
    choices.push_back({BeadKind::kK11t, t});
  }
  for (int t = 2; t <= max_secondaries; ++t) {
    choices.push_back({BeadKind::kK2t, t});
  }
  if (max_secondaries >= 2) choices.push_back({BeadKind::kK211, 2});
  if (with_k4 && max_secondaries >= 3) choices.push_back({BeadKind::kK4, 3});
  return choices;
}

void ExtendPrograms(BeadProgram& bare, int n, std::vector<BeadProgram>& out) {
  const int r = static_cast<int>(bare.beads.size());
  if (r > 0 && ProgramOrder(bare) > n) return;
  if (r >= (bare.necklace ? 2 : 1)) EmitWithSpikes(bare, n, out);
  // A K4 after the first position must be the last bead.
  if (r >= 2 && bare.beads.back().kind == BeadKind::kK4) return;
  for (const BeadSpec& b : BeadChoices(n, !bare.necklace)) {
    bare.beads.push_back(b);
    ExtendPrograms(bare, n, out);
    bare.beads.pop_back();
  }
}

}  // namespace

CensusRow OracleCensus::row() const {
  CensusRow r;
  r.n = n;
  r.unlabeled_connected = unlabeled_connected;
  r.unlabeled_yfree = yfree_forms.size();
  r.labeled_yfree = labeled_yfree;
  r.growth_point = GrowthPoint(n, r.labeled_yfree);
  return r;
}

OracleCensus RunOracleCensus(int n, int jobs) {
  CheckRange(n, kOracleCensusBound, "oracle census");
  jobs = std::max(jobs, 1);
  const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  std::vector<Shard> shards(jobs);
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j) {
    const std::uint64_t begin = total * j / jobs;
    const std::uint64_t end = total * (j + 1) / jobs;
    if (jobs == 1) {
      RunShard(n, begin, end, shards[j]);
    } else {
      workers.emplace_back(RunShard, n, begin, end, std::ref(shards[j]));
    }
  }
  for (std::thread& w : workers) w.join();
  OracleCensus census;
  census.n = n;
  std::set<std::string> connected;
  for (Shard& s : shards) {
    census.labeled_connected += s.labeled_connected;
    census.labeled_yfree += s.labeled_yfree;
    connected.merge(s.connected_forms);
    census.yfree_forms.merge(s.yfree_forms);
  }
  census.unlabeled_connected = connected.size();
  return census;
}

const std::vector<Graph>& ConnectedKernels() {
  static const std::vector<Graph> kernels = [] {
    std::vector<Graph> out;
    for (int k = 1; k <= 6; ++k) {
      std::vector<Edge> pairs;
      for (Vertex j = 1; j < k; ++j) {
        for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
      }
      std::map<std::string, Graph> classes;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
           ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b) {
          if ((mask >> b) & 1U) edges.push_back(pairs[b]);
        }
        Graph g(k, edges);
        if (!IsConnected(g)) continue;
        std::string form = CanonicalForm(g);
        if (!classes.count(form)) classes.emplace(std::move(form), g);
      }
      for (auto& [form, g] : classes) out.push_back(ParseGraph6(form));
    }
    return out;
  }();
  return kernels;
}

std::vector<BeadProgram> BeadPrograms(int n) {
  std::vector<BeadProgram> out;
  for (bool necklace : {false, true}) {
    BeadProgram bare;
    bare.necklace = necklace;
    ExtendPrograms(bare, n, out);
  }
  return out;
}

std::set<std::string> EnumerateYFree(int n) {
  CheckRange(n, kEnumerationBound, "structural enumeration");
  std::set<std::string> forms;
  for (const Graph& kernel : ConnectedKernels()) {
    const int k = kernel.order();
    if (k > n) continue;
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < k; ++v) {
      if (kernel.degree(v) == 1) leaves.push_back(v);
    }
    if (k == n) {
      forms.insert(CanonicalForm(kernel));
      continue;
    }
    // Both ends of K2 are leaves, but cloning one makes the other a hub.
    if (k == 2) leaves.resize(1);
    if (leaves.empty()) continue;
    for (const std::vector<int>& extra : Compositions(n - k, leaves.size())) {
      std::map<Vertex, int> multiplicity;
      for (std::size_t i = 0; i < leaves.size(); ++i) {
        if (extra[i] > 0) multiplicity[leaves[i]] = extra[i] + 1;
      }
      forms.insert(CanonicalForm(Realize(AllocateKernel(kernel, multiplicity))));
    }
  }
  for (const BeadProgram& program : BeadPrograms(n)) {
    forms.insert(CanonicalForm(Realize(Allocate(program))));
  }
  return forms;
}

BigInt LabeledCount(int n, const std::set<std::string>& forms) {
  const BigInt factorial = Factorial(n);
  BigInt total = 0;
  for (const std::string& form : forms) {
    total += factorial / AutomorphismCount(ParseGraph6(form));
  }
  return total;
}

BigInt LabeledCount(int n) { return LabeledCount(n, EnumerateYFree(n)); }

double GrowthPoint(int n, const BigInt& g_n) {
  const double ratio =
      g_n.convert_to<double>() / Factorial(n).convert_to<double>();
  return std::pow(ratio, 1.0 / n);
}

std::vector<CensusRow> GrowthEstimate(int n_max) {
  CheckRange(n_max, kEnumerationBound, "growth estimate");
  std::vector<CensusRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    const std::set<std::string> forms = EnumerateYFree(n);
    CensusRow row;
    row.n = n;
    row.unlabeled_yfree = forms.size();
    row.labeled_yfree = LabeledCount(n, forms);
    row.growth_point = GrowthPoint(n, row.labeled_yfree);
    rows.push_back(std::move(row));
  }
  return rows;
}

DeltaSolution SolveDelta() {
  auto f = [](double z) { return (z + z * z) * std::exp(z); };
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 1.0 ? lo : hi) = mid;
  }
  DeltaSolution s;
  s.z = 0.5 * (lo + hi);
  s.delta = 1.0 / s.z;
  s.residual = std::abs(f(s.z) - 1.0);
  return s;
}

}  // namespace yfree
