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

#include "yfree/certificate.h"

#include <algorithm>
#include <set>

namespace yfree {
namespace {

std::string VertexList(const std::vector<Vertex>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "]";
}

class ViolationSink {
 public:
  void Add(std::string tag, std::string detail) {
    out_.push_back({std::move(tag), std::move(detail)});
  }
  std::vector<Violation> Take() { return std::move(out_); }

 private:
  std::vector<Violation> out_;
};

int ExpectedPrimaries(BeadKind kind) { return kind == BeadKind::kK4 ? 1 : 2; }

void CheckBeadShape(const BeadInstance& b, int index, ViolationSink& sink) {
  const std::string where = "bead " + std::to_string(index) + " (" +
                            std::string(BeadKindName(b.kind)) + ")";
  const int p = static_cast<int>(b.primaries.size());
  const int s = static_cast<int>(b.secondaries.size());
  if (p != ExpectedPrimaries(b.kind)) {
    sink.Add("bead-shape", where + " has " + std::to_string(p) + " primaries");
  }
  if (s != b.t) {
    sink.Add("bead-shape", where + " lists " + std::to_string(s) +
                               " secondaries but t = " + std::to_string(b.t));
  }
  switch (b.kind) {
    case BeadKind::kK4:
      if (b.t != 3) sink.Add("bead-shape", where + " needs t = 3");
      break;
    case BeadKind::kK211:
      if (b.t != 2) sink.Add("bead-shape", where + " needs t = 2");
      break;
    case BeadKind::kK11t:
      if (b.t < 0) sink.Add("bead-shape", where + " needs t >= 0");
      break;
    case BeadKind::kK2t:
      if (b.t < 2) sink.Add("bead-shape", where + " needs t >= 2");
      break;
  }
}

// Each host vertex must play exactly one role: a primary (possibly listed by
// two beads), a secondary, a spike leaf, a kernel vertex or a clone.
class Coverage {
 public:
  explicit Coverage(int n) : n_(n), primary_beads_(n, 0), other_roles_(n, 0) {}

  bool InRange(Vertex v, ViolationSink& sink) {
    if (v >= 0 && v < n_) return true;
    sink.Add("vertex-out-of-range", "vertex " + std::to_string(v));
    return false;
  }
  void Primary(Vertex v, ViolationSink& sink) {
    if (InRange(v, sink)) ++primary_beads_[v];
  }
  void Other(Vertex v, ViolationSink& sink) {
    if (InRange(v, sink)) ++other_roles_[v];
  }
  int primary_beads(Vertex v) const {
    return v >= 0 && v < n_ ? primary_beads_[v] : 0;
  }

  void Finish(ViolationSink& sink) const {
    for (Vertex v = 0; v < n_; ++v) {
      const int roles = other_roles_[v] + (primary_beads_[v] > 0 ? 1 : 0);
      if (roles == 0) {
        sink.Add("vertex-uncovered", "vertex " + std::to_string(v));
      } else if (roles > 1) {
        sink.Add("vertex-reused", "vertex " + std::to_string(v));
      }
    }
  }

 private:
  int n_;
  std::vector<int> primary_beads_;
  std::vector<int> other_roles_;
};

int SharedCount(const BeadInstance& a, const BeadInstance& b) {
  int shared = 0;
  for (Vertex u : a.primaries) {
    shared += static_cast<int>(
        std::count(b.primaries.begin(), b.primaries.end(), u));
  }
  return shared;
}

void CheckBeadsAndSpikes(const std::vector<BeadInstance>& beads,
                         const SpikeMap& spikes, Coverage& cov,
                         ViolationSink& sink) {
  for (int i = 0; i < static_cast<int>(beads.size()); ++i) {
    const BeadInstance& b = beads[i];
    CheckBeadShape(b, i, sink);
    if (b.primaries.size() == 2 && b.primaries[0] == b.primaries[1]) {
      sink.Add("vertex-reused", "bead " + std::to_string(i) +
                                    " repeats primary " +
                                    std::to_string(b.primaries[0]));
    }
    for (Vertex p : b.primaries) cov.Primary(p, sink);
    for (Vertex s : b.secondaries) cov.Other(s, sink);
  }
  for (const auto& [key, leaves] : spikes) {
    if (leaves.empty()) {
      sink.Add("empty-spike", "primary " + std::to_string(key));
    }
    for (Vertex leaf : leaves) cov.Other(leaf, sink);
  }
}

void ValidateStrand(const SpikedStrandCert& c, int n, ViolationSink& sink) {
  Coverage cov(n);
  CheckBeadsAndSpikes(c.beads, c.spikes, cov, sink);
  const int r = static_cast<int>(c.beads.size());
  if (r == 0) sink.Add("empty-strand", "a strand needs at least one bead");
  for (int i = 0; i + 1 < r; ++i) {
    if (SharedCount(c.beads[i], c.beads[i + 1]) != 1) {
      sink.Add("aux-not-path", "beads " + std::to_string(i) + " and " +
                                   std::to_string(i + 1) +
                                   " must share exactly one primary");
    }
    for (int j = i + 2; j < r; ++j) {
      if (SharedCount(c.beads[i], c.beads[j]) != 0) {
        sink.Add("aux-not-path", "beads " + std::to_string(i) + " and " +
                                     std::to_string(j) + " share a primary");
      }
    }
  }
  for (int i = 1; i + 1 < r; ++i) {
    if (c.beads[i].kind == BeadKind::kK4) {
      sink.Add("K4-not-at-end", "bead " + std::to_string(i));
    }
  }
  for (const auto& [key, leaves] : c.spikes) {
    const int beads = cov.primary_beads(key);
    if (beads == 0) {
      sink.Add("spike-at-non-primary", "vertex " + std::to_string(key));
    } else if (beads == 1) {
      sink.Add("spike-at-end-primary", "vertex " + std::to_string(key));
    }
  }
  cov.Finish(sink);
}

void ValidateNecklace(const SpikedNecklaceCert& c, int n, ViolationSink& sink) {
  Coverage cov(n);
  CheckBeadsAndSpikes(c.beads, c.spikes, cov, sink);
  const int r = static_cast<int>(c.beads.size());
  if (r < 2) sink.Add("short-necklace", "a necklace needs at least two beads");
  for (int i = 0; i < r; ++i) {
    if (c.beads[i].kind == BeadKind::kK4) {
      sink.Add("K4-in-necklace", "bead " + std::to_string(i));
    }
  }
  if (r == 2 && c.beads[0].kind == BeadKind::kK11t &&
      c.beads[1].kind == BeadKind::kK11t) {
    sink.Add("two-K11-necklace", "both primaries would be joined twice");
  }
  if (r == 2) {
    std::set<Vertex> a(c.beads[0].primaries.begin(),
                       c.beads[0].primaries.end());
    std::set<Vertex> b(c.beads[1].primaries.begin(),
                       c.beads[1].primaries.end());
    if (a != b || a.size() != 2) {
      sink.Add("aux-not-cycle", "two beads must share both primaries");
    }
  } else if (r >= 3) {
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j) {
        const bool consecutive = j == i + 1 || (i == 0 && j == r - 1);
        const int shared = SharedCount(c.beads[i], c.beads[j]);
        if (shared != (consecutive ? 1 : 0)) {
          sink.Add("aux-not-cycle",
                   "beads " + std::to_string(i) + " and " + std::to_string(j) +
                       " share " + std::to_string(shared) + " primaries");
        }
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    const int beads = cov.primary_beads(v);
    if (beads != 0 && beads != 2) {
      sink.Add("aux-not-cycle", "primary " + std::to_string(v) + " lies in " +
                                    std::to_string(beads) + " beads");
    }
  }
  for (const auto& [key, leaves] : c.spikes) {
    if (cov.primary_beads(key) == 0) {
      sink.Add("spike-at-non-primary", "vertex " + std::to_string(key));
    }
  }
  cov.Finish(sink);
}

void ValidateKernel(const KernelClonesCert& c, int n, ViolationSink& sink) {
  const int k = c.kernel.order();
  if (k > 6) {
    sink.Add("kernel-too-large", std::to_string(k) + " vertices");
  }
  if (k == 0 || !IsConnected(c.kernel)) {
    sink.Add("kernel-disconnected", "kernel must be a connected graph");
  }
  if (static_cast<int>(c.kernel_map.size()) != k) {
    sink.Add("kernel-map", "map has " + std::to_string(c.kernel_map.size()) +
                               " entries for " + std::to_string(k) +
                               " kernel vertices");
  }
  Coverage cov(n);
  for (Vertex v : c.kernel_map) cov.Other(v, sink);
  for (const auto& [leaf, cls] : c.clones) {
    const std::string where = "kernel vertex " + std::to_string(leaf);
    if (leaf < 0 || leaf >= k) {
      sink.Add("cloned-non-leaf", where + " is not a kernel vertex");
      continue;
    }
    if (c.kernel.degree(leaf) != 1) {
      sink.Add("cloned-non-leaf", where + " has degree " +
                                      std::to_string(c.kernel.degree(leaf)));
    }
    if (cls.empty() || leaf >= static_cast<int>(c.kernel_map.size()) ||
        cls.front() != c.kernel_map[leaf]) {
      sink.Add("clone-class-mismatch",
               where + " class " + VertexList(cls) +
                   " must start with the leaf's own host id");
    }
    for (std::size_t i = 1; i < cls.size(); ++i) cov.Other(cls[i], sink);
    if (cls.size() >= 2 && c.kernel.degree(leaf) == 1) {
      const Vertex w = c.kernel.neighbors(leaf).front();
      auto it = c.clones.find(w);
      if (it != c.clones.end() && it->second.size() >= 2) {
        sink.Add("cloned-leaf-neighbor-cloned",
                 where + " and its neighbor " + std::to_string(w) +
                     " are both cloned");
      }
    }
  }
  cov.Finish(sink);
}

void AddBeadEdges(const BeadInstance& b, std::vector<Edge>& out) {
  auto add = [&out](Vertex u, Vertex v) {
    if (u != v) out.emplace_back(u, v);
  };
  const auto& p = b.primaries;
  const auto& s = b.secondaries;
  switch (b.kind) {
    case BeadKind::kK4: {
      std::vector<Vertex> all = p;
      all.insert(all.end(), s.begin(), s.end());
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) add(all[i], all[j]);
      }
      return;
    }
    case BeadKind::kK211:
      if (s.size() == 2) add(s[0], s[1]);
      break;
    case BeadKind::kK11t:
      if (p.size() == 2) add(p[0], p[1]);
      break;
    case BeadKind::kK2t:
      break;
  }
  for (Vertex x : s) {
    for (Vertex y : p) add(x, y);
  }
}

void AddSpikeEdges(const SpikeMap& spikes, std::vector<Edge>& out) {
  for (const auto& [key, leaves] : spikes) {
    for (Vertex leaf : leaves) {
      if (leaf != key) out.emplace_back(key, leaf);
    }
  }
}

}  // namespace

std::string_view BeadKindName(BeadKind kind) {
  switch (kind) {
    case BeadKind::kK4:
      return "K4";
    case BeadKind::kK211:
      return "K211";
    case BeadKind::kK11t:
      return "K11t";
    case BeadKind::kK2t:
      return "K2t";
  }
  return "?";
}

std::optional<BeadKind> BeadKindFromName(std::string_view name) {
  for (BeadKind k :
       {BeadKind::kK4, BeadKind::kK211, BeadKind::kK11t, BeadKind::kK2t}) {
    if (BeadKindName(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view CertificateTypeName(const Certificate& cert) {
  switch (cert.body.index()) {
    case 0:
      return "kernel";
    case 1:
      return "strand";
    default:
      return "necklace";
  }
}

std::string DescribeViolations(const std::vector<Violation>& violations) {
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += "; ";
    out += v.tag + ": " + v.detail;
  }
  return out;
}

std::vector<Violation> ValidateProgram(const Certificate& cert) {
  ViolationSink sink;
  if (cert.n < 1) sink.Add("vertex-uncovered", "certificate has n < 1");
  const int n = std::max(cert.n, 0);
  if (const auto* k = std::get_if<KernelClonesCert>(&cert.body)) {
    ValidateKernel(*k, n, sink);
  } else if (const auto* s = std::get_if<SpikedStrandCert>(&cert.body)) {
    ValidateStrand(*s, n, sink);
  } else {
    ValidateNecklace(std::get<SpikedNecklaceCert>(cert.body), n, sink);
  }
  return sink.Take();
}

std::vector<Edge> CertificateEdges(const Certificate& cert) {
  std::vector<Edge> out;
  if (const auto* k = std::get_if<KernelClonesCert>(&cert.body)) {
    const int order = k->kernel.order();
    auto host = [&](Vertex v) {
      return v < static_cast<int>(k->kernel_map.size()) ? k->kernel_map[v] : v;
    };
    for (const Edge& e : k->kernel.edges()) {
      out.emplace_back(host(e.u), host(e.v));
    }
    for (const auto& [leaf, cls] : k->clones) {
      if (leaf < 0 || leaf >= order || k->kernel.degree(leaf) != 1) continue;
      const Vertex hub = host(k->kernel.neighbors(leaf).front());
      for (std::size_t i = 1; i < cls.size(); ++i) {
        if (cls[i] != hub) out.emplace_back(cls[i], hub);
      }
    }
  } else {
    const auto& beads =
        cert.body.index() == 1
            ? std::get<SpikedStrandCert>(cert.body).beads
            : std::get<SpikedNecklaceCert>(cert.body).beads;
    const auto& spikes =
        cert.body.index() == 1
            ? std::get<SpikedStrandCert>(cert.body).spikes
            : std::get<SpikedNecklaceCert>(cert.body).spikes;
    for (const BeadInstance& b : beads) AddBeadEdges(b, out);
    AddSpikeEdges(spikes, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Realize(const Certificate& cert) {
  std::vector<Violation> violations = ValidateProgram(cert);
  if (!violations.empty()) {
    const std::string what =
        "invalid certificate: " + DescribeViolations(violations);
    throw CertificateError(what, std::move(violations));
  }
  const std::vector<Edge> edges = CertificateEdges(cert);
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw CertificateError("certificate describes a repeated edge", {});
  }
  return Graph(cert.n, edges);
}

bool VerifyCertificate(const Certificate& cert, const Graph& g) {
  if (cert.n != g.order()) return false;
  if (!ValidateProgram(cert).empty()) return false;
  return CertificateEdges(cert) == g.edges();
}

namespace {

// Primary indices of each bead in a program, in chain or ring order.
std::vector<std::vector<int>> PrimaryIndices(const BeadProgram& program) {
  const int r = static_cast<int>(program.beads.size());
  std::vector<std::vector<int>> out(r);
  if (program.necklace) {
    for (int i = 0; i < r; ++i) out[i] = {i, r == 0 ? 0 : (i + 1) % r};
    return out;
  }
  const int offset =
      r > 0 && program.beads.front().kind == BeadKind::kK4 ? -1 : 0;
  for (int i = 0; i < r; ++i) {
    if (program.beads[i].kind == BeadKind::kK4) {
      out[i] = {i == 0 ? i + offset + 1 : i + offset};
    } else {
      out[i] = {i + offset, i + offset + 1};
    }
  }
  return out;
}

int SecondaryCount(const BeadSpec& b) {
  switch (b.kind) {
    case BeadKind::kK4:
      return 3;
    case BeadKind::kK211:
      return 2;
    default:
      return b.t;
  }
}

}  // namespace

int PrimaryCount(const BeadProgram& program) {
  if (program.necklace) return static_cast<int>(program.beads.size());
  int count = 0;
  for (const auto& ids : PrimaryIndices(program)) {
    for (int id : ids) count = std::max(count, id + 1);
  }
  return count;
}

int ProgramOrder(const BeadProgram& program) {
  int total = PrimaryCount(program);
  for (const BeadSpec& b : program.beads) total += SecondaryCount(b);
  for (int s : program.spikes) total += s;
  return total;
}

Certificate Allocate(const BeadProgram& program) {
  const auto indices = PrimaryIndices(program);
  const int primaries = PrimaryCount(program);
  Vertex next = primaries;
  std::vector<BeadInstance> beads;
  for (std::size_t i = 0; i < program.beads.size(); ++i) {
    BeadInstance b;
    b.kind = program.beads[i].kind;
    b.t = SecondaryCount(program.beads[i]);
    b.primaries = indices[i];
    for (int s = 0; s < b.t; ++s) b.secondaries.push_back(next++);
    beads.push_back(std::move(b));
  }
  SpikeMap spikes;
  for (std::size_t p = 0; p < program.spikes.size(); ++p) {
    for (int s = 0; s < program.spikes[p]; ++s) {
      spikes[static_cast<Vertex>(p)].push_back(next++);
    }
  }
  Certificate cert;
  cert.n = next;
  if (program.necklace) {
    cert.body = SpikedNecklaceCert{std::move(beads), std::move(spikes)};
  } else {
    cert.body = SpikedStrandCert{std::move(beads), std::move(spikes)};
  }
  return cert;
}

Certificate AllocateKernel(const Graph& kernel,
                           const std::map<Vertex, int>& multiplicity) {
  KernelClonesCert body;
  body.kernel = kernel;
  for (Vertex v = 0; v < kernel.order(); ++v) body.kernel_map.push_back(v);
  Vertex next = kernel.order();
  for (const auto& [leaf, m] : multiplicity) {
    std::vector<Vertex> cls{leaf};
    for (int i = 1; i < m; ++i) cls.push_back(next++);
    body.clones[leaf] = std::move(cls);
  }
  Certificate cert;
  cert.n = next;
  cert.body = std::move(body);
  return cert;
}

}  // namespace yfree
