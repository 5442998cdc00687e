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


#include "yfree/prooflab.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "yfree/canonical.h"
#include "yfree/y_oracle.h"

namespace yfree {
namespace {

using Mask = std::uint32_t;

std::vector<Mask> AdjacencyMasks(const Graph& g) {
  std::vector<Mask> rows(g.order(), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= Mask{1} << e.v;
    rows[e.v] |= Mask{1} << e.u;
  }
  return rows;
}

// Vertices reachable from v without passing through `blocked` (v excluded).
int ReachableCount(const std::vector<Mask>& rows, Vertex v, Mask blocked) {
  Mask seen = Mask{1} << v;
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask m = frontier; m != 0; m &= m - 1) {
      next |= rows[std::countr_zero(m)];
    }
    frontier = next & ~seen & ~blocked;
    seen |= frontier;
  }
  return std::popcount(seen) - 1;
}

class PathSearch {
 public:
  explicit PathSearch(const std::vector<Mask>& rows) : rows_(rows) {}

  std::vector<std::vector<Vertex>> Run() {
    const int n = static_cast<int>(rows_.size());
    for (Vertex s = 0; s < n; ++s) {
      path_.assign(1, s);
      Extend(s, Mask{1} << s);
    }
    return std::move(found_);
  }

 private:
  void Extend(Vertex v, Mask used) {
    const int length = static_cast<int>(path_.size()) - 1;
    if (length + ReachableCount(rows_, v, used & ~(Mask{1} << v)) < best_) {
      return;
    }
    if (length > best_) {
      best_ = length;
      found_.clear();
    }
    if (length == best_) found_.push_back(path_);
    for (Mask m = rows_[v] & ~used; m != 0; m &= m - 1) {
      const Vertex w = std::countr_zero(m);
      path_.push_back(w);
      Extend(w, used | (Mask{1} << w));
      path_.pop_back();
    }
  }

  const std::vector<Mask>& rows_;
  std::vector<Vertex> path_;
  std::vector<std::vector<Vertex>> found_;
  int best_ = 0;
};

std::vector<LongestPath> LongestPaths(const Graph& g) {
  std::vector<LongestPath> out;
  const std::vector<Mask> rows = AdjacencyMasks(g);
  int best_sum = 0;
  for (auto& path : PathSearch(rows).Run()) {
    const int sum = g.degree(path.front()) + g.degree(path.back());
    if (out.empty() || sum < best_sum) best_sum = sum;
    out.push_back({std::move(path), false});
  }
  for (LongestPath& p : out) {
    p.degree_sum_minimal =
        g.degree(p.vertices.front()) + g.degree(p.vertices.back()) == best_sum;
  }
  return out;
}

class CycleSearch {
 public:
  explicit CycleSearch(const std::vector<Mask>& rows) : rows_(rows) {}

  std::optional<std::vector<Vertex>> Run() {
    const int n = static_cast<int>(rows_.size());
    for (Vertex s = 0; s < n && best_.size() < static_cast<std::size_t>(n);
         ++s) {
      start_ = s;
      allowed_ = ~((Mask{2} << s) - 1);
      path_.assign(1, s);
      Extend(s, Mask{1} << s);
    }
    if (best_.empty()) return std::nullopt;
    return best_;
  }

 private:
  bool Dominates(Mask cover) const {
    for (int x = 0; x < static_cast<int>(rows_.size()); ++x) {
      if (!((cover >> x) & 1U) && (rows_[x] & ~cover) != 0) return false;
    }
    return true;
  }

  void Extend(Vertex v, Mask used) {
    if (best_.size() == rows_.size()) return;
    const std::size_t len = path_.size();
    const Mask blocked = (used | ~allowed_) & ~(Mask{1} << v);
    if (len + ReachableCount(rows_, v, blocked) <= best_.size()) return;
    for (Mask m = rows_[v] & allowed_ & ~used; m != 0; m &= m - 1) {
      const Vertex w = std::countr_zero(m);
      path_.push_back(w);
      const Mask next = used | (Mask{1} << w);
      // Each cycle is seen in both directions; keep the one whose second
      // vertex is the smaller neighbor of the start.
      if (path_.size() >= 3 && ((rows_[w] >> start_) & 1U) &&
          path_[1] < w && path_.size() > best_.size() && Dominates(next)) {
        best_ = path_;
      }
      Extend(w, next);
      path_.pop_back();
    }
  }

  const std::vector<Mask>& rows_;
  Vertex start_ = 0;
  Mask allowed_ = 0;
  std::vector<Vertex> path_;
  std::vector<Vertex> best_;
};

void CheckOrder(const Graph& g, int bound) {
  if (g.order() > bound) {
    throw OrderBoundError("graph order " + std::to_string(g.order()) +
                          " exceeds the bound " + std::to_string(bound));
  }
}

std::string PathString(const std::vector<Vertex>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '-';
    out += std::to_string(path[i]);
  }
  return out;
}

std::string MaskString(Mask m) {
  std::string out = "{";
  for (Mask r = m; r != 0; r &= r - 1) {
    if (out.size() > 1) out += ',';
    out += std::to_string(std::countr_zero(r));
  }
  return out + "}";
}

std::string L(int i) { return "L_" + std::to_string(i); }

// Neighborhoods of one longest path, indexed by position.
struct PathView {
  std::vector<Vertex> v;
  int l = 0;
  Mask on_path = 0;
  std::vector<Mask> outside;  // L_i
};

PathView View(const std::vector<Mask>& rows, const std::vector<Vertex>& path) {
  PathView p;
  p.v = path;
  p.l = static_cast<int>(path.size()) - 1;
  for (Vertex x : path) p.on_path |= Mask{1} << x;
  for (Vertex x : path) p.outside.push_back(rows[x] & ~p.on_path);
  return p;
}

// Each check returns the witness of a failure, or "" on success.
using Check = std::string (*)(const std::vector<Mask>&, const PathView&);

std::string EndsEmpty(const std::vector<Mask>&, const PathView& p) {
  for (int i : {0, p.l}) {
    if (p.outside[i] != 0) return L(i) + " = " + MaskString(p.outside[i]);
  }
  return "";
}

std::string AdjacentDisjoint(const std::vector<Mask>&, const PathView& p) {
  for (int i = 0; i < p.l; ++i) {
    if (const Mask both = p.outside[i] & p.outside[i + 1]; both != 0) {
      return L(i) + " and " + L(i + 1) + " share " + MaskString(both);
    }
  }
  return "";
}

std::string OutsideIndependent(const std::vector<Mask>& rows,
                               const PathView& p) {
  Mask all = 0;
  for (Mask m : p.outside) all |= m;
  for (Mask m = all; m != 0; m &= m - 1) {
    const Vertex x = std::countr_zero(m);
    if (const Mask inner = rows[x] & all; inner != 0) {
      return "edge " + std::to_string(x) + "-" +
             std::to_string(std::countr_zero(inner));
    }
  }
  return "";
}

std::string PathDominating(const std::vector<Mask>& rows, const PathView& p) {
  Mask all = p.on_path;
  for (Mask m : p.outside) all |= m;
  const Mask everything =
      rows.size() == 32 ? ~Mask{0} : (Mask{1} << rows.size()) - 1;
  if (all != everything) {
    return "undominated " + MaskString(everything & ~all);
  }
  return "";
}

std::string IntersectionPattern(const std::vector<Mask>&, const PathView& p) {
  for (int i = 0; i <= p.l; ++i) {
    for (int j = i + 1; j <= p.l; ++j) {
      if ((p.outside[i] & p.outside[j]) == 0) continue;
      if (j == i + 2 || (i == 1 && j == p.l - 1)) continue;
      return L(i) + " and " + L(j) + " share " +
             MaskString(p.outside[i] & p.outside[j]);
    }
  }
  return "";
}

std::string TripleEmpty(const std::vector<Mask>&, const PathView& p) {
  Mask once = 0;
  Mask twice = 0;
  for (int i = 0; i <= p.l; ++i) {
    if (const Mask thrice = twice & p.outside[i]; thrice != 0) {
      return MaskString(thrice) + " lies in three of the L_i";
    }
    twice |= once & p.outside[i];
    once |= p.outside[i];
  }
  return "";
}

std::string VeePendant(const std::vector<Mask>&, const PathView& p) {
  for (int i = 1; i < p.l; ++i) {
    const Mask vee = p.outside[i - 1] & p.outside[i + 1];
    if (p.outside[i] != 0 && vee != 0) {
      return L(i) + " = " + MaskString(p.outside[i]) + " under vee through " +
             MaskString(vee);
    }
  }
  return "";
}

std::string VeesNoCross(const std::vector<Mask>&, const PathView& p) {
  // Vees with endpoints v_i, v_{i+2}; a vee starting at i - 1 or i + 1 has
  // v_{i+1} as an endpoint and is necessarily distinct.
  for (int i = 0; i + 2 <= p.l; ++i) {
    if ((p.outside[i] & p.outside[i + 2]) == 0) continue;
    for (int j : {i - 1, i + 1}) {
      if (j < 0 || j + 2 > p.l) continue;
      if ((p.outside[j] & p.outside[j + 2]) != 0) {
        return "vees at " + std::to_string(i) + "," + std::to_string(i + 2) +
               " and " + std::to_string(j) + "," + std::to_string(j + 2);
      }
    }
  }
  return "";
}

std::string PossibleChords(const std::vector<Mask>& rows, const PathView& p) {
  const int l = p.l;
  for (int j = 0; j <= l; ++j) {
    for (int k = j + 2; k <= l; ++k) {
      if (!((rows[p.v[j]] >> p.v[k]) & 1U)) continue;
      const bool allowed = k == j + 2 || (j == 0 && k == 3) ||
                           (j == l - 3 && k == l) ||
                           (j <= 1 && k >= l - 1);
      if (!allowed) {
        return "chord v_" + std::to_string(j) + " v_" + std::to_string(k);
      }
    }
  }
  return "";
}

struct NamedCheck {
  const char* id;
  bool needs_long_path;
  Check check;
};

constexpr NamedCheck kChecks[] = {
    {"ends-empty", false, EndsEmpty},
    {"adjacent-disjoint", false, AdjacentDisjoint},
    {"outside-independent", false, OutsideIndependent},
    {"path-dominating", false, PathDominating},
    {"intersection-pattern", true, IntersectionPattern},
    {"triple-empty", true, TripleEmpty},
    {"vee-pendant", true, VeePendant},
    {"vees-no-cross", true, VeesNoCross},
    {"possible-chords", true, PossibleChords},
};

constexpr int kLongPath = 5;

bool LongCycleHypothesis(const std::vector<Mask>& rows, const PathView& p) {
  const int l = p.l;
  for (int j : {0, 1}) {
    for (int k : {l - 1, l}) {
      if ((rows[p.v[j]] >> p.v[k]) & 1U) return true;
    }
  }
  return (p.outside[1] & p.outside[l - 1]) != 0;
}

void Record(LemmaResult& result, const std::string& witness,
            const std::vector<Vertex>& path) {
  ++result.paths_checked;
  if (!witness.empty() && result.status != LemmaStatus::kFail) {
    result.status = LemmaStatus::kFail;
    result.witness = "path " + PathString(path) + ": " + witness;
  } else if (result.status == LemmaStatus::kNotApplicable) {
    result.status = LemmaStatus::kPass;
  }
}

}  // namespace

std::vector<LongestPath> LongestPathsBruteforce(const Graph& g) {
  CheckOrder(g, kProofLabBound);
  return LongestPaths(g);
}

std::optional<std::vector<Vertex>> MaxEdgeDominatingCycle(const Graph& g) {
  CheckOrder(g, kProofLabBound);
  return CycleSearch(AdjacencyMasks(g)).Run();
}

std::string_view LemmaStatusName(LemmaStatus status) {
  switch (status) {
    case LemmaStatus::kPass:
      return "pass";
    case LemmaStatus::kFail:
      return "fail";
    case LemmaStatus::kNotApplicable:
      return "not-applicable";
  }
  return "";
}

bool LemmaReport::all_passed() const {
  return std::none_of(lemmas.begin(), lemmas.end(), [](const LemmaResult& r) {
    return r.status == LemmaStatus::kFail;
  });
}

LemmaReport CheckStructuralLemmas(const Graph& g) {
  if (g.order() == 0 || !IsConnected(g)) {
    throw GraphError("lemma checks need a nonempty connected graph");
  }
  CheckOrder(g, kLemmaCheckBound);
  if (FindYSubgraph(g)) {
    throw LemmaHypothesisError("graph contains Y");
  }
  const std::vector<Mask> rows = AdjacencyMasks(g);

  LemmaReport report;
  for (LongestPath& p : LongestPaths(g)) {
    if (p.degree_sum_minimal) report.paths.push_back(std::move(p.vertices));
  }
  report.path_length = static_cast<int>(report.paths.front().size()) - 1;
  const bool long_path = report.path_length >= kLongPath;

  for (const NamedCheck& c : kChecks) {
    LemmaResult result;
    result.id = c.id;
    if (!c.needs_long_path || long_path) {
      for (const auto& path : report.paths) {
        Record(result, c.check(rows, View(rows, path)), path);
      }
    }
    report.lemmas.push_back(std::move(result));
  }

  LemmaResult cycle;
  cycle.id = "edge-dominating-cycle";
  if (long_path) {
    std::optional<std::vector<Vertex>> best;
    bool searched = false;
    for (const auto& path : report.paths) {
      if (!LongCycleHypothesis(rows, View(rows, path))) continue;
      if (!searched) {
        best = CycleSearch(rows).Run();
        searched = true;
      }
      const int need = std::max(report.path_length - 1, 4);
      const int have = best ? static_cast<int>(best->size()) : 0;
      std::string witness;
      if (have < need) {
        witness = "longest edge-dominating cycle has length " +
                  std::to_string(have) + " < " + std::to_string(need);
      }
      Record(cycle, witness, path);
    }
  }
  report.lemmas.push_back(std::move(cycle));
  return report;
}

}  // namespace yfree
