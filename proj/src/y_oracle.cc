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

#include "yfree/y_oracle.h"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>
#include <vector>

namespace yfree {
namespace {

constexpr int kYOrder = 7;
constexpr int kYSize = 6;

// Lexicographically smallest (e0, e1, e2) with e_i drawn from cand[i] and
// all three distinct. Candidate lists are sorted.
std::optional<std::array<Vertex, 3>> SmallestDistinctEnds(
    const std::array<std::vector<Vertex>, 3>& cand) {
  for (Vertex e0 : cand[0]) {
    for (Vertex e1 : cand[1]) {
      if (e1 == e0) continue;
      for (Vertex e2 : cand[2]) {
        if (e2 != e0 && e2 != e1) return std::array<Vertex, 3>{e0, e1, e2};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool IsValidWitness(const Graph& g, const YWitness& w) {
  std::array<Vertex, 7> all{w.center, w.mids[0], w.mids[1], w.mids[2],
                            w.ends[0], w.ends[1], w.ends[2]};
  for (Vertex v : all) {
    if (v < 0 || v >= g.order()) return false;
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
  for (int i = 0; i < 3; ++i) {
    if (!g.has_edge(w.center, w.mids[i]) || !g.has_edge(w.mids[i], w.ends[i])) {
      return false;
    }
  }
  return true;
}

std::optional<YWitness> FindYSubgraph(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) < 3) continue;
    std::vector<Vertex> mids;
    for (Vertex m : g.neighbors(v)) {
      if (g.degree(m) >= 2) mids.push_back(m);
    }
    const int k = static_cast<int>(mids.size());
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        for (int c = b + 1; c < k; ++c) {
          const std::array<Vertex, 3> triple{mids[a], mids[b], mids[c]};
          std::array<std::vector<Vertex>, 3> cand;
          for (int i = 0; i < 3; ++i) {
            for (Vertex e : g.neighbors(triple[i])) {
              if (e != v && e != triple[0] && e != triple[1] &&
                  e != triple[2]) {
                cand[i].push_back(e);
              }
            }
          }
          if (cand[0].empty() || cand[1].empty() || cand[2].empty()) continue;
          if (auto ends = SmallestDistinctEnds(cand)) {
            YWitness w{v, triple, *ends};
            if (!IsValidWitness(g, w)) {
              throw std::logic_error("Y search produced an invalid witness");
            }
            return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool ContainsY(const SmallGraph& g) {
  for (int v = 0; v < g.n; ++v) {
    if (std::popcount(g.rows[v]) < 3) continue;
    const std::uint32_t self = 1U << v;
    std::uint32_t mids = 0;
    for (std::uint32_t m = g.rows[v]; m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      if ((g.rows[u] & ~self) != 0) mids |= 1U << u;
    }
    for (std::uint32_t ma = mids; ma != 0; ma &= ma - 1) {
      const int a = std::countr_zero(ma);
      for (std::uint32_t mb = ma & (ma - 1); mb != 0; mb &= mb - 1) {
        const int b = std::countr_zero(mb);
        for (std::uint32_t mc = mb & (mb - 1); mc != 0; mc &= mc - 1) {
          const int c = std::countr_zero(mc);
          const std::uint32_t used = self | (1U << a) | (1U << b) | (1U << c);
          const std::uint32_t ea = g.rows[a] & ~used;
          const std::uint32_t eb = g.rows[b] & ~used;
          const std::uint32_t ec = g.rows[c] & ~used;
          // Hall's condition for three distinct ends.
          if (ea == 0 || eb == 0 || ec == 0) continue;
          if (std::popcount(ea | eb) < 2 || std::popcount(ea | ec) < 2 ||
              std::popcount(eb | ec) < 2 || std::popcount(ea | eb | ec) < 3) {
            continue;
          }
          return true;
        }
      }
    }
  }
  return false;
}

namespace {

// Search state for the minor order: a small graph with every component of
// order >= 7 (smaller components can never host the connected Y).
SmallGraph DropSmallComponents(const SmallGraph& g) {
  std::uint32_t keep = 0;
  std::uint32_t seen = 0;
  for (int s = 0; s < g.n; ++s) {
    if ((seen >> s) & 1U) continue;
    std::uint32_t comp = 1U << s;
    std::uint32_t frontier = comp;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t m = frontier; m != 0; m &= m - 1) {
        next |= g.rows[std::countr_zero(m)];
      }
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    if (std::popcount(comp) >= kYOrder) keep |= comp;
  }
  if (std::popcount(keep) == g.n) return g;
  std::array<int, kSmallGraphCapacity> index{};
  SmallGraph out;
  for (int v = 0; v < g.n; ++v) {
    if ((keep >> v) & 1U) index[v] = out.n++;
  }
  for (int v = 0; v < g.n; ++v) {
    if (!((keep >> v) & 1U)) continue;
    for (std::uint32_t m = g.rows[v] & keep; m != 0; m &= m - 1) {
      out.rows[index[v]] |= 1U << index[std::countr_zero(m)];
    }
  }
  return out;
}

int EdgeCount(const SmallGraph& g) {
  int twice = 0;
  for (int v = 0; v < g.n; ++v) twice += std::popcount(g.rows[v]);
  return twice / 2;
}

int MaxDegree(const SmallGraph& g) {
  int best = 0;
  for (int v = 0; v < g.n; ++v) best = std::max(best, std::popcount(g.rows[v]));
  return best;
}

// Merge v into u (u < v) and renumber the vertices after v.
SmallGraph Contract(const SmallGraph& g, int u, int v) {
  SmallGraph merged = g;
  merged.rows[u] = (g.rows[u] | g.rows[v]) & ~((1U << u) | (1U << v));
  for (int w = 0; w < g.n; ++w) {
    if (w == u || w == v) continue;
    if ((g.rows[w] >> v) & 1U) {
      merged.rows[w] = (merged.rows[w] & ~(1U << v)) | (1U << u);
    }
  }
  SmallGraph out;
  out.n = g.n - 1;
  auto squeeze = [v](std::uint32_t row) {
    const std::uint32_t low = row & ((1U << v) - 1);
    const std::uint32_t high = (row >> (v + 1)) << v;
    return low | high;
  };
  for (int w = 0, i = 0; w < g.n; ++w) {
    if (w == v) continue;
    out.rows[i++] = squeeze(merged.rows[w]);
  }
  return out;
}

SmallGraph DeleteVertex(const SmallGraph& g, int v) {
  SmallGraph cut = g;
  for (int w = 0; w < g.n; ++w) cut.rows[w] &= ~(1U << v);
  cut.rows[v] = 0;
  // An isolated vertex is its own small component.
  return DropSmallComponents(cut);
}

class MinorSearch {
 public:
  MinorSearch() : target_(CanonicalForm(SubdividedClaw())) {}

  bool Reaches(const SmallGraph& raw) {
    const SmallGraph g = DropSmallComponents(raw);
    if (g.n < kYOrder || EdgeCount(g) < kYSize) return false;
    // Minors of disjoint paths and cycles are again paths and cycles.
    if (MaxDegree(g) <= 2) return false;
    std::string key = CanonicalForm(g, kSmallGraphCapacity);
    if (key == target_) return true;
    if (!visited_.insert(std::move(key)).second) return false;

    if (g.n > kYOrder) {
      for (int v = 0; v < g.n; ++v) {
        if (Reaches(DeleteVertex(g, v))) return true;
      }
      for (int u = 0; u < g.n; ++u) {
        for (std::uint32_t m = g.rows[u] & ~((2U << u) - 1); m != 0;
             m &= m - 1) {
          if (Reaches(Contract(g, u, std::countr_zero(m)))) return true;
        }
      }
    }
    for (int u = 0; u < g.n; ++u) {
      for (std::uint32_t m = g.rows[u] & ~((2U << u) - 1); m != 0; m &= m - 1) {
        const int v = std::countr_zero(m);
        SmallGraph cut = g;
        cut.rows[u] &= ~(1U << v);
        cut.rows[v] &= ~(1U << u);
        if (Reaches(cut)) return true;
      }
    }
    return false;
  }

 private:
  std::string target_;
  std::unordered_set<std::string> visited_;
};

}  // namespace

bool HasYMinorBruteforce(const Graph& g) {
  if (g.order() > kMinorSearchBound) {
    throw OrderBoundError("minor search is limited to n <= " +
                          std::to_string(kMinorSearchBound));
  }
  MinorSearch search;
  return search.Reaches(SmallGraph::From(g));
}

}  // namespace yfree
