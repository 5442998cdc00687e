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


// End-to-end acceptance run. Each criterion prints one PASS or FAIL line;
// the exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "yfree/canonical.h"
#include "yfree/certificate.h"
#include "yfree/enumerator.h"
#include "yfree/generator.h"
#include "yfree/graph.h"
#include "yfree/graph_io.h"
#include "yfree/pathdecomp.h"
#include "yfree/prooflab.h"
#include "yfree/recognizer.h"
#include "yfree/y_oracle.h"

namespace yfree {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failure; only the first few are described.
  void Fail(const std::string& what) {
    if (pass || failures < 3) detail << " [" << what << "]";
    pass = false;
    ++failures;
  }
  int failures = 0;
};

std::uint64_t PairMaskLimit(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

// Recognition agrees with the Y search on every connected labeled graph with
// at most seven vertices, and every certificate verifies.
void RecognizerMatchesOracle(Outcome& o) {
  std::uint64_t graphs = 0, certified = 0;
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t mask = 0; mask < PairMaskLimit(n); ++mask) {
      const Graph g = oracle::FromPairMask(n, mask);
      if (!IsConnected(g)) continue;
      ++graphs;
      const RecognitionResult r = Recognize(g);
      const bool has_y = FindYSubgraph(g).has_value();
      if (r.contains_y() != has_y) {
        o.Fail("verdict differs on " + EmitGraph6(g));
      } else if (r.contains_y()) {
        if (!IsValidWitness(g, r.witness())) {
          o.Fail("bad witness on " + EmitGraph6(g));
        }
      } else {
        ++certified;
        if (!VerifyCertificate(r.certificate(), g)) {
          o.Fail("certificate rejected on " + EmitGraph6(g));
        }
      }
    }
  }
  o.detail << " connected labeled graphs=" << graphs
           << " certified=" << certified;
}

// Y subgraph <=> Y minor, exhaustively up to isomorphism for n <= 7 and on
// random graphs with 8 and 9 vertices.
void SubgraphMatchesMinor(Outcome& o) {
  int exhaustive = 0;
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> seen;
    for (std::uint64_t mask = 0; mask < PairMaskLimit(n); ++mask) {
      const Graph g = oracle::FromPairMask(n, mask);
      if (!seen.insert(CanonicalForm(g)).second) continue;
      ++exhaustive;
      const bool sub = FindYSubgraph(g).has_value();
      if (sub != HasYMinorBruteforce(g) || sub != oracle::HasY(g)) {
        o.Fail("disagreement on " + EmitGraph6(g));
      }
    }
  }
  std::mt19937_64 rng(20260101);
  int random = 0, with_y = 0;
  for (int n : {8, 9}) {
    for (int i = 0; i < 10000; ++i) {
      const double p = std::uniform_real_distribution<double>(0.1, 0.5)(rng);
      std::vector<Edge> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (std::bernoulli_distribution(p)(rng)) edges.emplace_back(u, v);
        }
      }
      const Graph g(n, edges);
      ++random;
      const bool sub = FindYSubgraph(g).has_value();
      with_y += sub;
      if (sub != HasYMinorBruteforce(g) || sub != oracle::HasY(g)) {
        o.Fail("disagreement on " + EmitGraph6(g));
      }
    }
  }
  o.detail << " unlabeled graphs n<=7=" << exhaustive << " random=" << random
           << " (with Y " << with_y << ")";
}

// A tree is Y-free exactly when it is a caterpillar; all trees n <= 10.
void TreesCaterpillars(Outcome& o) {
  // Unlabeled trees on 1..10 vertices.
  const std::vector<int> expected = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  std::vector<Graph> layer = {Graph(1, {})};
  int total = 0, caterpillars = 0;
  for (int n = 1; n <= 10; ++n) {
    if (static_cast<int>(layer.size()) != expected[n - 1]) {
      o.Fail("found " + std::to_string(layer.size()) + " trees on " +
             std::to_string(n) + " vertices");
    }
    std::map<std::string, Graph> next;
    for (const Graph& t : layer) {
      ++total;
      const bool caterpillar = IsCaterpillar(t);
      caterpillars += caterpillar;
      if (caterpillar == FindYSubgraph(t).has_value() ||
          caterpillar == oracle::HasY(t)) {
        o.Fail("caterpillar test differs on " + EmitGraph6(t));
      }
      for (Vertex v = 0; v < t.order(); ++v) {
        std::vector<Edge> edges = t.edges();
        edges.emplace_back(v, t.order());
        const Graph grown(t.order() + 1, edges);
        next.emplace(CanonicalForm(grown), grown);
      }
    }
    layer.clear();
    for (auto& [form, g] : next) layer.push_back(g);
  }
  o.detail << " trees=" << total << " caterpillars=" << caterpillars;
}

// The structural enumeration reproduces the brute-force census.
void CensusMatchesEnumeration(Outcome& o) {
  const std::vector<std::uint64_t> labeled_connected = {1,   1,     4,
                                                        38,  728,   26704,
                                                        1866256};
#ifdef YFREE_CENSUS_N8
  const int top = 8;
#else
  const int top = 7;
#endif
  for (int n = 1; n <= top; ++n) {
    const OracleCensus census = RunOracleCensus(n);
    const std::set<std::string> forms = EnumerateYFree(n);
    const std::string at = " at n=" + std::to_string(n);
    if (forms != census.yfree_forms) o.Fail("unlabeled sets differ" + at);
    if (LabeledCount(n) != BigInt(census.labeled_yfree)) {
      o.Fail("labeled counts differ" + at);
    }
    if (n <= 7 && census.labeled_connected != labeled_connected[n - 1]) {
      o.Fail("connected labeled count" + at);
    }
    if (n <= 6 && (census.labeled_yfree != census.labeled_connected ||
                   forms.size() != census.unlabeled_connected)) {
      o.Fail("small orders must all be Y-free" + at);
    }
    // Labeled Y-free count from scratch, n <= 6.
    if (n <= 6) {
      std::uint64_t raw = 0;
      for (std::uint64_t mask = 0; mask < PairMaskLimit(n); ++mask) {
        const Graph g = oracle::FromPairMask(n, mask);
        raw += oracle::Connected(g) && !oracle::HasY(g);
      }
      if (raw != census.labeled_yfree) o.Fail("independent count" + at);
    }
    o.detail << " n" << n << "=" << forms.size() << "/"
             << census.labeled_yfree;
  }
}

void DeltaValue(Outcome& o) {
  const DeltaSolution d = SolveDelta();
  const double z = 1.0 / d.delta;
  const double residual = std::fabs((z + z * z) * std::exp(z) - 1.0);
  if (std::fabs(d.delta - 2.25159) > 1e-4) o.Fail("delta off target");
  if (residual > 1e-10 || d.residual > 1e-10) o.Fail("residual too large");
  std::ostringstream value;
  value.precision(12);
  value << d.delta;
  o.detail << " delta=" << value.str() << " residual=" << residual;
}

GeneratorParams ParamsForSeed(std::uint64_t seed) {
  GeneratorParams p;
  p.n_target = 1 + static_cast<int>(seed % 40);
  p.shape = static_cast<Shape>(seed % 4);
  p.allow_k4 = seed % 5 != 0;
  p.max_t = 2 + static_cast<int>(seed % 4);
  p.max_spikes = static_cast<int>(seed % 3);
  return p;
}

// Certificates the generator can produce for this seed, or none when the
// parameter mix is infeasible.
std::optional<Certificate> TryGenerate(std::uint64_t seed) {
  try {
    return RandomCertificate(seed, ParamsForSeed(seed));
  } catch (const GeneratorError&) {
    return std::nullopt;
  }
}

bool HasK4Bead(const Certificate& c) {
  const auto* strand = std::get_if<SpikedStrandCert>(&c.body);
  if (strand == nullptr) return false;
  for (const BeadInstance& b : strand->beads) {
    if (b.kind == BeadKind::kK4) return true;
  }
  return false;
}

void PathwidthBounds(Outcome& o) {
  int checked = 0, k4_width3 = 0;
  std::map<std::string, int> widest;
  for (std::uint64_t seed = 0; checked < 10000; ++seed) {
    const std::optional<Certificate> c = TryGenerate(seed);
    if (!c) continue;
    ++checked;
    const Graph g = Realize(*c);
    const PathDecomposition pd = Decompose(*c);
    const DecompositionReport report = VerifyDecomposition(g, pd);
    if (!report.ok() || !oracle::ValidPathDecomposition(g, pd.bags)) {
      o.Fail("invalid decomposition for seed " + std::to_string(seed));
      continue;
    }
    const int w = *report.width;
    const std::string type(CertificateTypeName(*c));
    const bool k4 = HasK4Bead(*c);
    int bound = 3;
    if (type == "kernel") bound = 5;
    if (type == "strand" && !k4) bound = 2;
    if (w > bound) o.Fail("width " + std::to_string(w) + " for seed " +
                          std::to_string(seed));
    if (k4 && w == 3) ++k4_width3;
    const std::string key = type + (k4 ? "+K4" : "");
    widest[key] = std::max(widest[key], w);
  }
  if (k4_width3 == 0) o.Fail("no K4 strand of width exactly 3");
  o.detail << " certificates=" << checked;
  for (const auto& [key, w] : widest) o.detail << " " << key << "<=" << w;
  o.detail << " K4-strands-at-3=" << k4_width3;
}

void GeneratorSoundness(Outcome& o) {
  int checked = 0;
  for (std::uint64_t seed = 100000; checked < 10000; ++seed) {
    const std::optional<Certificate> c = TryGenerate(seed);
    if (!c) continue;
    ++checked;
    const Graph g = Realize(*c);
    if (g.order() != ParamsForSeed(seed).n_target || !IsConnected(g) ||
        FindYSubgraph(g).has_value() || oracle::HasY(g) ||
        !VerifyCertificate(*c, g)) {
      o.Fail("seed " + std::to_string(seed));
    }
  }
  int caterpillars = 0;
  for (int spine = 1; spine <= 8; ++spine) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << spine); ++mask) {
      ++caterpillars;
      const Graph g = ThickCaterpillar(spine, mask);
      const std::string at = " spine=" + std::to_string(spine) +
                             " mask=" + std::to_string(mask);
      if (FindYSubgraph(g).has_value() || oracle::HasY(g)) {
        o.Fail("Y found" + at);
        continue;
      }
      const std::optional<SpikedStrandCert> strand = ParseStrand(g);
      if (!strand || !VerifyCertificate(Certificate{g.order(), *strand}, g)) {
        o.Fail("no strand certificate" + at);
      }
      if (!VerifyCertificate(ThickCaterpillarCertificate(spine, mask), g) ||
          !VerifyCertificate(Recognize(g).certificate(), g)) {
        o.Fail("certificate rejected" + at);
      }
    }
  }
  o.detail << " certificates=" << checked
           << " thick caterpillars=" << caterpillars;
}

bool LongCycleHypothesis(const Graph& g, const std::vector<Vertex>& path) {
  const int l = static_cast<int>(path.size()) - 1;
  for (int j : {0, 1}) {
    for (int k : {l - 1, l}) {
      if (g.has_edge(path[j], path[k])) return true;
    }
  }
  const std::set<Vertex> on(path.begin(), path.end());
  for (Vertex w : g.neighbors(path[1])) {
    if (!on.count(w) && g.has_edge(w, path[l - 1])) return true;
  }
  return false;
}

bool DominatingCycle(const Graph& g, const std::vector<Vertex>& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k < 3) return false;
  std::set<Vertex> on(cycle.begin(), cycle.end());
  if (static_cast<int>(on.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % k])) return false;
  }
  for (const Edge& e : g.edges()) {
    if (!on.count(e.u) && !on.count(e.v)) return false;
  }
  return true;
}

void ProofLabSuite(Outcome& o) {
  int graphs = 0, paths = 0, cycle_cases = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const std::string& form : EnumerateYFree(n)) {
      const Graph g = ParseGraph6(form);
      ++graphs;
      const LemmaReport report = CheckStructuralLemmas(g);
      paths += static_cast<int>(report.paths.size());
      if (!report.all_passed()) {
        for (const LemmaResult& r : report.lemmas) {
          if (r.status == LemmaStatus::kFail) o.Fail(form + " " + r.id);
        }
      }
      if (report.path_length != oracle::LongestPathLength(g)) {
        o.Fail(form + " longest path length");
      }
      const int l = report.path_length;
      bool hypothesis = false;
      for (const auto& path : report.paths) {
        if (l >= 5 && LongCycleHypothesis(g, path)) hypothesis = true;
      }
      if (!hypothesis) continue;
      ++cycle_cases;
      const auto cycle = MaxEdgeDominatingCycle(g);
      if (!cycle || !DominatingCycle(g, *cycle) ||
          static_cast<int>(cycle->size()) < std::max(l - 1, 4)) {
        o.Fail(form + " edge-dominating cycle");
      }
    }
  }
  o.detail << " graphs=" << graphs << " minimal longest paths=" << paths
           << " long-cycle cases=" << cycle_cases;
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace
}  // namespace yfree

int main() {
  using namespace yfree;
  const std::vector<Criterion> criteria = {
      {1, "recognizer agrees with the Y search, certificates verify",
       RecognizerMatchesOracle},
      {2, "Y subgraph iff Y minor", SubgraphMatchesMinor},
      {3, "trees: caterpillar iff Y-free", TreesCaterpillars},
      {4, "structural enumeration equals brute-force census",
       CensusMatchesEnumeration},
      {5, "growth constant delta", DeltaValue},
      {6, "path decomposition width bounds", PathwidthBounds},
      {7, "generated graphs are Y-free", GeneratorSoundness},
      {8, "longest-path structure checks", ProofLabSuite},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.Fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": "
              << c.name << " |" << o.detail.str() << " | "
              << static_cast<int>(seconds * 1000) << " ms" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
