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

#include "yfree/canonical.h"

#include <algorithm>
#include <bit>
#include <numeric>

namespace yfree {
namespace {

using Coloring = std::array<std::int8_t, kSmallGraphCapacity>;
using Code = std::array<std::uint32_t, kSmallGraphCapacity>;
using Signature = std::array<std::uint8_t, kSmallGraphCapacity + 1>;

std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Refines `color` (k colors, numbered 0..k-1) to the coarsest equitable
// partition below it. New colors are ranks of (old color, neighbor counts per
// color), so the result depends only on the colored graph up to isomorphism.
// When `trace` is given, one hash per round summarizing the signatures is
// appended; isomorphic colored graphs produce identical traces.
int Refine(const SmallGraph& g, Coloring& color, int k,
           std::vector<std::uint64_t>* trace) {
  const int n = g.n;
  std::array<Signature, kSmallGraphCapacity> sig;
  std::array<int, kSmallGraphCapacity> idx;
  while (true) {
    std::array<std::uint32_t, kSmallGraphCapacity> cell{};
    for (int v = 0; v < n; ++v) cell[color[v]] |= 1U << v;
    for (int v = 0; v < n; ++v) {
      sig[v].fill(0);
      sig[v][0] = static_cast<std::uint8_t>(color[v]);
      for (int c = 0; c < k; ++c) {
        sig[v][1 + c] =
            static_cast<std::uint8_t>(std::popcount(g.rows[v] & cell[c]));
      }
    }
    std::iota(idx.begin(), idx.begin() + n, 0);
    const int width = k + 1;
    auto less = [&](int a, int b) {
      return std::lexicographical_compare(sig[a].begin(),
                                          sig[a].begin() + width,
                                          sig[b].begin(),
                                          sig[b].begin() + width);
    };
    std::sort(idx.begin(), idx.begin() + n, less);
    int rank = -1;
    std::uint64_t round_hash = Mix(static_cast<std::uint64_t>(k));
    std::uint64_t group = 0;
    for (int i = 0; i < n; ++i) {
      const int v = idx[i];
      if (i == 0 || less(idx[i - 1], v)) {
        if (i > 0) round_hash = Mix(round_hash ^ group);
        ++rank;
        group = 0;
        for (int b = 0; b < width; ++b) group = Mix(group ^ sig[v][b]);
      }
      group = Mix(group + 1);
      color[v] = static_cast<std::int8_t>(rank);
    }
    round_hash = Mix(round_hash ^ group);
    if (trace != nullptr) trace->push_back(round_hash);
    const int new_k = rank + 1;
    if (new_k == k) return k;
    k = new_k;
  }
}

// Gives v its own color just before the rest of its cell.
Coloring Individualize(const Coloring& color, int n, int v) {
  Coloring out = color;
  const int c = color[v];
  for (int u = 0; u < n; ++u) {
    if (color[u] > c || (color[u] == c && u != v)) ++out[u];
  }
  return out;
}

int FirstNonSingletonCell(const Coloring& color, int n, int k) {
  std::array<int, kSmallGraphCapacity> size{};
  for (int v = 0; v < n; ++v) ++size[color[v]];
  for (int c = 0; c < k; ++c) {
    if (size[c] > 1) return c;
  }
  return -1;
}

bool Twins(const SmallGraph& g, int u, int v) {
  return (g.rows[u] & ~(1U << v)) == (g.rows[v] & ~(1U << u));
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SmallGraph& g) : g_(g) {}

  void Run() {
    Coloring color{};
    Search(color, 1);
  }

  const Code& best() const { return best_; }
  const Coloring& best_labels() const { return best_labels_; }

 private:
  void Search(Coloring color, int k) {
    const int n = g_.n;
    k = Refine(g_, color, k, nullptr);
    if (k == n) {
      Code code{};
      for (int v = 0; v < n; ++v) {
        std::uint32_t row = 0;
        for (std::uint32_t m = g_.rows[v]; m != 0; m &= m - 1) {
          row |= 1U << color[std::countr_zero(m)];
        }
        code[color[v]] = row;
      }
      if (!has_best_ || std::lexicographical_compare(
                            best_.begin(), best_.begin() + n, code.begin(),
                            code.begin() + n)) {
        best_ = code;
        best_labels_ = color;
        has_best_ = true;
      }
      return;
    }
    const int target = FirstNonSingletonCell(color, n, k);
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      bool redundant = false;
      for (int u : tried) {
        if (Twins(g_, u, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      tried.push_back(v);
      Search(Individualize(color, n, v), k + 1);
    }
  }

  const SmallGraph& g_;
  Code best_{};
  Coloring best_labels_{};
  bool has_best_ = false;
};

// Is there an automorphism of g carrying coloring `a` onto coloring `b`?
bool ColoredIsomorphismExists(const SmallGraph& g, Coloring a, Coloring b,
                              int k) {
  const int n = g.n;
  std::vector<std::uint64_t> trace_a, trace_b;
  const int ka = Refine(g, a, k, &trace_a);
  const int kb = Refine(g, b, k, &trace_b);
  if (ka != kb || trace_a != trace_b) return false;
  if (ka == n) {
    std::array<int, kSmallGraphCapacity> by_color{};
    for (int y = 0; y < n; ++y) by_color[b[y]] = y;
    std::array<int, kSmallGraphCapacity> map{};
    for (int x = 0; x < n; ++x) map[x] = by_color[a[x]];
    for (int x = 0; x < n; ++x) {
      std::uint32_t image = 0;
      for (std::uint32_t m = g.rows[x]; m != 0; m &= m - 1) {
        image |= 1U << map[std::countr_zero(m)];
      }
      if (image != g.rows[map[x]]) return false;
    }
    return true;
  }
  const int target = FirstNonSingletonCell(a, n, ka);
  int x = 0;
  while (a[x] != target) ++x;
  const Coloring a_next = Individualize(a, n, x);
  std::vector<int> tried;
  for (int y = 0; y < n; ++y) {
    if (b[y] != target) continue;
    bool redundant = false;
    for (int u : tried) {
      if (Twins(g, u, y)) {
        redundant = true;
        break;
      }
    }
    if (redundant) continue;
    tried.push_back(y);
    if (ColoredIsomorphismExists(g, a_next, Individualize(b, n, y), ka + 1)) {
      return true;
    }
  }
  return false;
}

void CheckBound(int n, int max_order) {
  if (n > max_order || n > kSmallGraphCapacity) {
    throw OrderBoundError("graph order " + std::to_string(n) +
                          " exceeds the canonical-form bound " +
                          std::to_string(std::min(max_order,
                                                  kSmallGraphCapacity)));
  }
}

std::string Graph6FromRows(int n, const Code& rows) {
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | static_cast<int>((rows[i] >> j) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

}  // namespace

SmallGraph SmallGraph::From(const Graph& g) {
  CheckBound(g.order(), kSmallGraphCapacity);
  SmallGraph s;
  s.n = g.order();
  for (const Edge& e : g.edges()) s.AddEdge(e.u, e.v);
  return s;
}

Graph SmallGraph::ToGraph() const {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (has_edge(i, j)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

std::string CanonicalForm(const SmallGraph& g, int max_order) {
  CheckBound(g.n, max_order);
  if (g.n == 0) return "?";
  CanonicalSearch search(g);
  search.Run();
  return Graph6FromRows(g.n, search.best());
}

std::string CanonicalForm(const Graph& g, int max_order) {
  CheckBound(g.order(), max_order);
  return CanonicalForm(SmallGraph::From(g), max_order);
}

std::vector<int> CanonicalLabeling(const Graph& g, int max_order) {
  CheckBound(g.order(), max_order);
  const SmallGraph s = SmallGraph::From(g);
  std::vector<int> perm(s.n);
  if (s.n == 0) return perm;
  CanonicalSearch search(s);
  search.Run();
  for (int v = 0; v < s.n; ++v) perm[v] = search.best_labels()[v];
  return perm;
}

std::uint64_t AutomorphismCount(const Graph& g, int max_order) {
  CheckBound(g.order(), max_order);
  const SmallGraph s = SmallGraph::From(g);
  const int n = s.n;
  Coloring color{};
  int k = n == 0 ? 0 : Refine(s, color, 1, nullptr);
  std::uint64_t count = 1;
  while (k < n) {
    const int target = FirstNonSingletonCell(color, n, k);
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (color[v] == target) members.push_back(v);
    }
    const int v = members.front();
    const Coloring fixed = Individualize(color, n, v);
    std::uint64_t orbit = 1;
    for (std::size_t i = 1; i < members.size(); ++i) {
      const int w = members[i];
      if (Twins(s, v, w) ||
          ColoredIsomorphismExists(s, fixed, Individualize(color, n, w),
                                   k + 1)) {
        ++orbit;
      }
    }
    count *= orbit;
    color = fixed;
    k = Refine(s, color, k + 1, nullptr);
  }
  return count;
}

}  // namespace yfree
