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


#include "yfree/recognizer.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "yfree/blocks.h"

namespace yfree {
namespace {

// The input with every degree-1 vertex removed. Core ids are dense; leaves
// stay in host ids, filed under the core vertex they hang from.
struct Despiked {
  Graph core;
  std::vector<Vertex> to_host;
  std::vector<std::vector<Vertex>> leaves_at;

  bool has_leaves(Vertex c) const { return !leaves_at[c].empty(); }
};

// Requires a connected graph with n >= 3, so no leaf hangs from a leaf.
Despiked Despike(const Graph& g) {
  Despiked d;
  std::vector<int> to_core(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) {
      to_core[v] = static_cast<int>(d.to_host.size());
      d.to_host.push_back(v);
    }
  }
  d.core = g.Induced(d.to_host);
  d.leaves_at.resize(d.to_host.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) d.leaves_at[to_core[g.neighbors(v).front()]].push_back(v);
  }
  return d;
}

BeadInstance MakeBead(BeadKind kind, std::vector<Vertex> primaries,
                      std::vector<Vertex> secondaries) {
  BeadInstance b;
  b.kind = kind;
  b.t = static_cast<int>(secondaries.size());
  b.primaries = std::move(primaries);
  b.secondaries = std::move(secondaries);
  return b;
}

BeadInstance Edge11(Vertex a, Vertex b) {
  return MakeBead(BeadKind::kK11t, {a, b}, {});
}

// Translates a bead from local ids (index into `ids`) to the ids in `ids`.
BeadInstance MapBead(const BeadInstance& b, const std::vector<Vertex>& ids) {
  BeadInstance out = b;
  for (Vertex& v : out.primaries) v = ids[v];
  for (Vertex& v : out.secondaries) v = ids[v];
  std::sort(out.secondaries.begin(), out.secondaries.end());
  return out;
}

// Orders a two-primary bead so that `first` comes first.
void PutFirst(BeadInstance& b, Vertex first) {
  if (b.primaries.size() == 2 && b.primaries[1] == first) {
    std::swap(b.primaries[0], b.primaries[1]);
  }
}

Vertex OtherPrimary(const BeadInstance& b, Vertex known) {
  return b.primaries.front() == known ? b.primaries.back()
                                      : b.primaries.front();
}

// Reads h with primaries {a, b}.
std::optional<BeadInstance> ClassifyWithPrimaries(const Graph& h, Vertex a,
                                                  Vertex b) {
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (v == a || v == b) continue;
    if (!h.has_edge(v, a) || !h.has_edge(v, b)) return std::nullopt;
    rest.push_back(v);
  }
  int inner_edges = 0;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      inner_edges += h.has_edge(rest[i], rest[j]) ? 1 : 0;
    }
  }
  const bool joined = h.has_edge(a, b);
  if (inner_edges == 0) {
    if (joined) return MakeBead(BeadKind::kK11t, {a, b}, rest);
    if (rest.size() >= 2) return MakeBead(BeadKind::kK2t, {a, b}, rest);
    return std::nullopt;
  }
  if (inner_edges == 1 && rest.size() == 2 && !joined) {
    return MakeBead(BeadKind::kK211, {a, b}, rest);
  }
  return std::nullopt;
}

bool IsComplete(const Graph& h) {
  const std::size_t n = h.order();
  return h.size() == n * (n - 1) / 2;
}

Certificate WrapStrand(int n, SpikedStrandCert body) {
  Certificate cert;
  cert.n = n;
  cert.body = std::move(body);
  return cert;
}

Certificate WrapNecklace(int n, SpikedNecklaceCert body) {
  Certificate cert;
  cert.n = n;
  cert.body = std::move(body);
  return cert;
}

// Appends a K11t(0) bead from `primary` to its first leaf; the remaining
// leaves become spikes (the primary now lies in two beads).
void CapWithLeaf(Vertex primary, const std::vector<Vertex>& leaves,
                 bool at_front, SpikedStrandCert& strand) {
  if (leaves.empty()) return;
  if (at_front) {
    strand.beads.insert(strand.beads.begin(), Edge11(leaves.front(), primary));
  } else {
    strand.beads.push_back(Edge11(primary, leaves.front()));
  }
  if (leaves.size() > 1) {
    strand.spikes[primary].assign(leaves.begin() + 1, leaves.end());
  }
}

std::optional<SpikedStrandCert> StrandFromSingleBlock(const Despiked& d) {
  const Graph& core = d.core;
  std::vector<Vertex> bearing;
  for (Vertex c = 0; c < core.order(); ++c) {
    if (d.has_leaves(c)) bearing.push_back(c);
  }
  if (bearing.size() > 2) return std::nullopt;
  auto bead = ClassifyBlock(core, bearing);
  if (!bead) return std::nullopt;
  BeadInstance mapped = MapBead(*bead, d.to_host);
  SpikedStrandCert strand;
  if (bearing.size() == 2) {
    const Vertex a = d.to_host[bearing[0]];
    const Vertex b = d.to_host[bearing[1]];
    PutFirst(mapped, a);
    strand.beads.push_back(mapped);
    CapWithLeaf(a, d.leaves_at[bearing[0]], true, strand);
    CapWithLeaf(b, d.leaves_at[bearing[1]], false, strand);
  } else if (bearing.size() == 1) {
    const Vertex a = d.to_host[bearing[0]];
    if (mapped.primaries.size() == 2) PutFirst(mapped, OtherPrimary(mapped, a));
    strand.beads.push_back(mapped);
    CapWithLeaf(a, d.leaves_at[bearing[0]], false, strand);
  } else {
    strand.beads.push_back(mapped);
  }
  return strand;
}

std::optional<SpikedStrandCert> StrandFromBlockPath(
    const Despiked& d, const BlockDecomposition& bd) {
  const int k = static_cast<int>(bd.blocks.size());
  std::vector<std::vector<Vertex>> cuts_of(k);
  std::map<Vertex, std::vector<int>> blocks_at;
  for (const auto& [block, cut] : bd.block_cut_edges) {
    cuts_of[block].push_back(cut);
    blocks_at[cut].push_back(block);
  }
  for (const auto& [cut, blocks] : blocks_at) {
    if (blocks.size() != 2) return std::nullopt;
  }
  int start = -1;
  for (int b = 0; b < k; ++b) {
    if (cuts_of[b].empty() || cuts_of[b].size() > 2) return std::nullopt;
    if (cuts_of[b].size() == 1 && start < 0) start = b;
  }
  if (start < 0) return std::nullopt;

  // Walk the block-cut path: order[i] is a block, joints[i] joins order[i]
  // and order[i + 1].
  std::vector<int> order{start};
  std::vector<Vertex> joints;
  int prev_cut = -1;
  while (true) {
    const int b = order.back();
    Vertex next_cut = -1;
    for (Vertex c : cuts_of[b]) {
      if (c != prev_cut) next_cut = c;
    }
    if (next_cut < 0) break;
    const auto& pair = blocks_at[next_cut];
    const int next = pair[0] == b ? pair[1] : pair[0];
    joints.push_back(next_cut);
    order.push_back(next);
    prev_cut = next_cut;
    if (static_cast<int>(order.size()) > k) return std::nullopt;
  }
  if (static_cast<int>(order.size()) != k) return std::nullopt;

  SpikedStrandCert strand;
  std::vector<Vertex> ends(2, -1);  // far primaries of the end blocks (core)
  for (int i = 0; i < k; ++i) {
    const std::vector<Vertex>& block = bd.blocks[order[i]];
    std::vector<Vertex> attach;
    if (i > 0) attach.push_back(joints[i - 1]);
    if (i + 1 < k) attach.push_back(joints[i]);
    Vertex far = -1;
    for (Vertex c : block) {
      if (!d.has_leaves(c) ||
          std::find(attach.begin(), attach.end(), c) != attach.end()) {
        continue;
      }
      // Leaves away from the joints can only sit at an end block's far
      // primary.
      if (i > 0 && i + 1 < k) return std::nullopt;
      if (far >= 0) return std::nullopt;
      far = c;
    }
    if (far >= 0) attach.push_back(far);
    std::vector<Vertex> local_attach;
    for (Vertex c : attach) {
      local_attach.push_back(static_cast<Vertex>(
          std::lower_bound(block.begin(), block.end(), c) - block.begin()));
    }
    std::sort(local_attach.begin(), local_attach.end());
    auto bead = ClassifyBlock(d.core.Induced(block), local_attach);
    if (!bead) return std::nullopt;
    std::vector<Vertex> ids;
    for (Vertex c : block) ids.push_back(d.to_host[c]);
    BeadInstance mapped = MapBead(*bead, ids);
    if (mapped.primaries.size() == 2) {
      if (i > 0) {
        PutFirst(mapped, d.to_host[joints[i - 1]]);
      } else {
        PutFirst(mapped, OtherPrimary(mapped, d.to_host[joints[0]]));
      }
    }
    if (i == 0 && mapped.primaries.size() == 2) {
      ends[0] = d.to_host[joints[0]] == mapped.primaries[0]
                    ? -1
                    : mapped.primaries[0];
    }
    if (i == k - 1 && mapped.primaries.size() == 2) {
      ends[1] = mapped.primaries[1];
    }
    strand.beads.push_back(std::move(mapped));
  }
  for (Vertex c : joints) {
    if (d.has_leaves(c)) strand.spikes[d.to_host[c]] = d.leaves_at[c];
  }
  auto leaves_of_host = [&d](Vertex host) -> const std::vector<Vertex>& {
    const auto it = std::lower_bound(d.to_host.begin(), d.to_host.end(), host);
    return d.leaves_at[it - d.to_host.begin()];
  };
  if (ends[0] >= 0) CapWithLeaf(ends[0], leaves_of_host(ends[0]), true, strand);
  if (ends[1] >= 0) {
    CapWithLeaf(ends[1], leaves_of_host(ends[1]), false, strand);
  }
  return strand;
}

// ---- necklaces ----

struct PairContents {
  std::vector<Vertex> singles;
  std::vector<std::pair<Vertex, Vertex>> doubles;
  bool joined = false;
};

// Components of core - primaries, filed by the primary pair they attach to.
// Fails unless each component is a vertex or an edge hanging off exactly two
// primaries in the way beads allow.
std::optional<std::map<std::pair<Vertex, Vertex>, PairContents>> GroupByPair(
    const Graph& core, const std::vector<bool>& primary) {
  std::map<std::pair<Vertex, Vertex>, PairContents> pairs;
  std::vector<bool> done(core.order(), false);
  for (Vertex v = 0; v < core.order(); ++v) {
    if (primary[v] || done[v]) continue;
    std::vector<Vertex> comp{v};
    std::vector<Vertex> attach;
    done[v] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : core.neighbors(comp[i])) {
        if (primary[w]) {
          attach.push_back(w);
        } else if (!done[w]) {
          done[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(attach.begin(), attach.end());
    attach.erase(std::unique(attach.begin(), attach.end()), attach.end());
    if (attach.size() != 2 || comp.size() > 2) return std::nullopt;
    const Vertex a = attach[0];
    const Vertex b = attach[1];
    PairContents& slot = pairs[{a, b}];
    if (comp.size() == 1) {
      if (core.degree(v) != 2) return std::nullopt;
      slot.singles.push_back(v);
      continue;
    }
    for (Vertex c : comp) {
      if (core.degree(c) != 3 || !core.has_edge(c, a) || !core.has_edge(c, b)) {
        return std::nullopt;
      }
    }
    slot.doubles.emplace_back(std::min(comp[0], comp[1]),
                              std::max(comp[0], comp[1]));
  }
  for (const Edge& e : core.edges()) {
    if (primary[e.u] && primary[e.v]) pairs[{e.u, e.v}].joined = true;
  }
  return pairs;
}

// One bead per primary pair, strung into a ring of length >= 3.
std::optional<std::vector<BeadInstance>> RingFromPrimaries(
    const Graph& core, const std::vector<bool>& primary) {
  auto grouped = GroupByPair(core, primary);
  if (!grouped) return std::nullopt;
  std::map<Vertex, std::vector<BeadInstance>> at;
  int bead_count = 0;
  for (const auto& [pair, slot] : *grouped) {
    const auto [a, b] = pair;
    BeadInstance bead;
    if (!slot.doubles.empty()) {
      if (slot.joined || !slot.singles.empty() || slot.doubles.size() > 1) {
        return std::nullopt;
      }
      bead = MakeBead(BeadKind::kK211, {a, b},
                      {slot.doubles[0].first, slot.doubles[0].second});
    } else if (slot.joined) {
      bead = MakeBead(BeadKind::kK11t, {a, b}, slot.singles);
    } else if (slot.singles.size() >= 2) {
      bead = MakeBead(BeadKind::kK2t, {a, b}, slot.singles);
    } else {
      return std::nullopt;
    }
    at[a].push_back(bead);
    at[b].push_back(bead);
    ++bead_count;
  }
  for (Vertex v = 0; v < core.order(); ++v) {
    if (primary[v] && at[v].size() != 2) return std::nullopt;
  }
  if (bead_count < 3) return std::nullopt;

  // Walk the ring from the smallest primary towards its smaller partner.
  const Vertex start = at.begin()->first;
  auto partner = [](const BeadInstance& b, Vertex from) {
    return OtherPrimary(b, from);
  };
  const auto& first_two = at[start];
  BeadInstance current = partner(first_two[0], start) <
                                 partner(first_two[1], start)
                             ? first_two[0]
                             : first_two[1];
  std::vector<BeadInstance> ring;
  Vertex from = start;
  while (true) {
    PutFirst(current, from);
    const Vertex to = current.primaries[1];
    ring.push_back(current);
    if (to == start) break;
    if (static_cast<int>(ring.size()) > bead_count) return std::nullopt;
    const auto& options = at[to];
    current = options[0].primaries == ring.back().primaries ||
                      (options[0].primaries[0] == ring.back().primaries[1] &&
                       options[0].primaries[1] == ring.back().primaries[0])
                  ? options[1]
                  : options[0];
    from = to;
  }
  if (static_cast<int>(ring.size()) != bead_count) return std::nullopt;
  return ring;
}

// Necklaces with exactly two primaries {a, b}: every other vertex hangs off
// both of them, and the material splits into two beads.
std::optional<std::vector<BeadInstance>> TwoBeadRing(const Graph& core,
                                                     Vertex a, Vertex b) {
  std::vector<bool> primary(core.order(), false);
  primary[a] = primary[b] = true;
  auto grouped = GroupByPair(core, primary);
  if (!grouped || grouped->size() != 1) return std::nullopt;
  const PairContents& slot = grouped->begin()->second;
  const auto& s = slot.singles;
  std::vector<BeadInstance> beads;
  for (const auto& [c, d] : slot.doubles) {
    beads.push_back(MakeBead(BeadKind::kK211, {a, b}, {c, d}));
  }
  if (slot.doubles.size() > 2) return std::nullopt;
  if (slot.doubles.size() == 2) {
    if (!s.empty() || slot.joined) return std::nullopt;
  } else if (slot.doubles.size() == 1) {
    if (slot.joined) {
      beads.push_back(MakeBead(BeadKind::kK11t, {a, b}, s));
    } else if (s.size() >= 2) {
      beads.push_back(MakeBead(BeadKind::kK2t, {a, b}, s));
    } else {
      return std::nullopt;
    }
  } else if (slot.joined) {
    if (s.size() < 2) return std::nullopt;
    beads.push_back(MakeBead(BeadKind::kK11t, {a, b}, {}));
    beads.push_back(MakeBead(BeadKind::kK2t, {a, b}, s));
  } else {
    if (s.size() < 4) return std::nullopt;
    beads.push_back(MakeBead(BeadKind::kK2t, {a, b}, {s[0], s[1]}));
    beads.push_back(
        MakeBead(BeadKind::kK2t, {a, b}, std::vector<Vertex>(s.begin() + 2, s.end())));
  }
  return beads;
}

// First guess at the primaries of a despiked necklace with at least three
// beads. Secondaries have degree 2 (K11t, K2t) or 3 (K211); every vertex
// that cannot be read as a secondary is taken as primary.
std::vector<bool> GuessPrimaries(const Despiked& d) {
  const Graph& core = d.core;
  const int n = core.order();
  std::vector<bool> primary(n, true);
  auto leafless_deg = [&](Vertex v, int deg) {
    return !d.has_leaves(v) && core.degree(v) == deg;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (leafless_deg(v, 2)) {
      const Vertex x = core.neighbors(v)[0];
      const Vertex y = core.neighbors(v)[1];
      if (core.has_edge(x, y)) {
        primary[v] = false;
        continue;
      }
      int twins = 0;
      for (Vertex w : core.neighbors(x)) {
        if (leafless_deg(w, 2) && core.has_edge(w, y)) ++twins;
      }
      primary[v] = twins < 2;
    } else if (leafless_deg(v, 3)) {
      for (Vertex u : core.neighbors(v)) {
        if (!leafless_deg(u, 3)) continue;
        std::vector<Vertex> rest_v, rest_u;
        for (Vertex w : core.neighbors(v)) {
          if (w != u) rest_v.push_back(w);
        }
        for (Vertex w : core.neighbors(u)) {
          if (w != v) rest_u.push_back(w);
        }
        if (rest_v == rest_u && !core.has_edge(rest_v[0], rest_v[1])) {
          primary[v] = false;
        }
      }
    }
  }
  return primary;
}

std::optional<SpikedNecklaceCert> NecklaceFromBeads(
    const Despiked& d, std::vector<BeadInstance> beads) {
  SpikedNecklaceCert necklace;
  std::vector<bool> is_primary(d.core.order(), false);
  for (BeadInstance& b : beads) {
    for (Vertex p : b.primaries) is_primary[p] = true;
    necklace.beads.push_back(MapBead(b, d.to_host));
  }
  for (Vertex c = 0; c < d.core.order(); ++c) {
    if (!d.has_leaves(c)) continue;
    if (!is_primary[c]) return std::nullopt;
    necklace.spikes[d.to_host[c]] = d.leaves_at[c];
  }
  return necklace;
}

}  // namespace

LeafContraction ContractLeafClones(const Graph& g) {
  LeafContraction out;
  const int n = g.order();
  std::vector<bool> dropped(n, false);
  std::map<Vertex, std::vector<Vertex>> by_neighbor;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) by_neighbor[g.neighbors(v).front()].push_back(v);
  }
  for (auto& [hub, leaves] : by_neighbor) {
    for (std::size_t i = 1; i < leaves.size(); ++i) dropped[leaves[i]] = true;
    out.classes[leaves.front()] = leaves;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!dropped[v]) out.kernel_to_host.push_back(v);
  }
  out.kernel = g.Induced(out.kernel_to_host);
  return out;
}

std::optional<BeadInstance> ClassifyBlock(const Graph& h,
                                          std::span<const Vertex> attach) {
  const int n = h.order();
  if (attach.size() > 2 || n < 2) return std::nullopt;
  for (Vertex a : attach) {
    if (a < 0 || a >= n) return std::nullopt;
  }
  if (n == 4 && IsComplete(h)) {
    if (attach.size() == 2) return std::nullopt;
    const Vertex p = attach.empty() ? 0 : attach[0];
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v) {
      if (v != p) rest.push_back(v);
    }
    return MakeBead(BeadKind::kK4, {p}, rest);
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const bool covers = std::all_of(attach.begin(), attach.end(),
                                      [&](Vertex x) { return x == a || x == b; });
      if (!covers) continue;
      if (auto bead = ClassifyWithPrimaries(h, a, b)) return bead;
    }
  }
  return std::nullopt;
}

std::optional<SpikedStrandCert> ParseStrand(const Graph& g) {
  const int n = g.order();
  if (n < 2 || !IsConnected(g)) return std::nullopt;
  std::optional<SpikedStrandCert> strand;
  if (n == 2) {
    strand = SpikedStrandCert{{Edge11(0, 1)}, {}};
  } else {
    const Despiked d = Despike(g);
    if (d.core.order() == 1) {
      const Vertex hub = d.to_host[0];
      const auto& leaves = d.leaves_at[0];
      strand = SpikedStrandCert{
          {Edge11(leaves[0], hub), Edge11(hub, leaves[1])}, {}};
      if (leaves.size() > 2) {
        strand->spikes[hub].assign(leaves.begin() + 2, leaves.end());
      }
    } else {
      const BlockDecomposition bd = BlocksAndCutVertices(d.core);
      strand = bd.blocks.size() == 1 ? StrandFromSingleBlock(d)
                                     : StrandFromBlockPath(d, bd);
    }
  }
  if (!strand || !VerifyCertificate(WrapStrand(n, *strand), g)) {
    return std::nullopt;
  }
  return strand;
}

std::optional<SpikedNecklaceCert> ParseNecklace(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !IsConnected(g)) return std::nullopt;
  const Despiked d = Despike(g);
  const Graph& core = d.core;
  if (core.order() < 3 || BlocksAndCutVertices(core).blocks.size() != 1) {
    return std::nullopt;
  }
  auto attempt = [&](std::optional<std::vector<BeadInstance>> beads)
      -> std::optional<SpikedNecklaceCert> {
    if (!beads) return std::nullopt;
    auto necklace = NecklaceFromBeads(d, std::move(*beads));
    if (!necklace || !VerifyCertificate(WrapNecklace(n, *necklace), g)) {
      return std::nullopt;
    }
    return necklace;
  };

  const std::vector<bool> guess = GuessPrimaries(d);
  if (auto found = attempt(RingFromPrimaries(core, guess))) return found;
  for (Vertex a = 0; a < core.order(); ++a) {
    for (Vertex b = a + 1; b < core.order(); ++b) {
      if (auto found = attempt(TwoBeadRing(core, a, b))) return found;
    }
  }
  // A degree-2 vertex between two K11t(0) beads looks like a secondary when
  // the ring has three beads; promote it together with its neighbors.
  for (Vertex s = 0; s < core.order(); ++s) {
    if (core.degree(s) != 2) continue;
    std::vector<bool> promoted = guess;
    promoted[s] = true;
    for (Vertex w : core.neighbors(s)) promoted[w] = true;
    if (promoted == guess) continue;
    if (auto found = attempt(RingFromPrimaries(core, promoted))) return found;
  }
  return std::nullopt;
}

RecognitionResult Recognize(const Graph& g) {
  if (g.order() == 0) throw GraphError("cannot recognize the empty graph");
  if (!IsConnected(g)) {
    throw GraphError(
        "graph is disconnected; recognize each connected component separately");
  }
  if (auto w = FindYSubgraph(g)) return RecognitionResult{*w};

  const LeafContraction lc = ContractLeafClones(g);
  if (lc.kernel.order() <= 6) {
    KernelClonesCert body;
    body.kernel = lc.kernel;
    body.kernel_map = lc.kernel_to_host;
    for (const auto& [rep, cls] : lc.classes) {
      if (cls.size() < 2) continue;
      const auto it = std::lower_bound(lc.kernel_to_host.begin(),
                                       lc.kernel_to_host.end(), rep);
      body.clones[static_cast<Vertex>(it - lc.kernel_to_host.begin())] = cls;
    }
    Certificate cert;
    cert.n = g.order();
    cert.body = std::move(body);
    return RecognitionResult{std::move(cert)};
  }
  if (auto strand = ParseStrand(g)) {
    return RecognitionResult{WrapStrand(g.order(), std::move(*strand))};
  }
  if (auto necklace = ParseNecklace(g)) {
    return RecognitionResult{WrapNecklace(g.order(), std::move(*necklace))};
  }
  throw std::logic_error("Y-free graph " + DescribeEdges(g) +
                         " received no structure certificate");
}

}  // namespace yfree
