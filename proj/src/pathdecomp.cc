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


#include "yfree/pathdecomp.h"

#include <algorithm>
#include <string>

namespace yfree {
namespace {

using Bag = std::vector<Vertex>;

Bag Sorted(Bag bag) {
  std::sort(bag.begin(), bag.end());
  return bag;
}

Vertex Shared(const BeadInstance& a, const BeadInstance& b) {
  for (Vertex p : a.primaries) {
    if (std::find(b.primaries.begin(), b.primaries.end(), p) !=
        b.primaries.end()) {
      return p;
    }
  }
  return -1;
}

Vertex Other(const BeadInstance& b, Vertex p) {
  return b.primaries.front() == p ? b.primaries.back() : b.primaries.front();
}

// Bags of one bead entered at primary `in` and left at primary `out`.
void BeadBags(const BeadInstance& b, Vertex in, Vertex out,
              std::vector<Bag>& bags) {
  switch (b.kind) {
    case BeadKind::kK4: {
      Bag bag = b.primaries;
      bag.insert(bag.end(), b.secondaries.begin(), b.secondaries.end());
      bags.push_back(Sorted(bag));
      return;
    }
    case BeadKind::kK211: {
      const Vertex c = b.secondaries[0];
      const Vertex d = b.secondaries[1];
      bags.push_back(Sorted({in, c, d}));
      bags.push_back(Sorted({c, d, out}));
      return;
    }
    default:
      if (b.secondaries.empty()) {
        bags.push_back(Sorted({in, out}));
      }
      for (Vertex s : b.secondaries) bags.push_back(Sorted({in, out, s}));
  }
}

void SpikeBags(const SpikeMap& spikes, Vertex at, std::vector<Bag>& bags) {
  const auto it = spikes.find(at);
  if (it == spikes.end()) return;
  for (Vertex leaf : it->second) bags.push_back(Sorted({at, leaf}));
}

std::vector<Bag> StrandBags(const SpikedStrandCert& c) {
  std::vector<Bag> bags;
  const auto& beads = c.beads;
  const int r = static_cast<int>(beads.size());
  Vertex in = -1;
  for (int i = 0; i < r; ++i) {
    const BeadInstance& b = beads[i];
    Vertex out = -1;
    if (i + 1 < r) {
      out = Shared(b, beads[i + 1]);
      if (i == 0) in = b.kind == BeadKind::kK4 ? out : Other(b, out);
    } else if (i == 0) {
      in = b.primaries.front();
      out = b.primaries.back();
    } else {
      out = Other(b, in);
    }
    BeadBags(b, in, out, bags);
    if (i + 1 < r) SpikeBags(c.spikes, out, bags);
    in = out;
  }
  return bags;
}

std::vector<Bag> NecklaceBags(const SpikedNecklaceCert& c) {
  std::vector<Bag> bags;
  const auto& beads = c.beads;
  const int r = static_cast<int>(beads.size());
  const Vertex anchor = r == 2 ? beads[0].primaries[0]
                               : Other(beads[0], Shared(beads[0], beads[1]));
  SpikeBags(c.spikes, anchor, bags);
  Vertex in = anchor;
  for (int i = 0; i < r; ++i) {
    const Vertex out = Other(beads[i], in);
    BeadBags(beads[i], in, out, bags);
    if (i + 1 < r) SpikeBags(c.spikes, out, bags);
    in = out;
  }
  for (Bag& bag : bags) {
    if (std::find(bag.begin(), bag.end(), anchor) == bag.end()) {
      bag.push_back(anchor);
      std::sort(bag.begin(), bag.end());
    }
  }
  return bags;
}

std::vector<Bag> KernelBags(const KernelClonesCert& c) {
  const int k = c.kernel.order();
  const int half = (k + 1) / 2;
  // Clones grouped by the kernel vertex they hang from.
  std::vector<std::vector<Vertex>> hanging(k);
  for (const auto& [leaf, cls] : c.clones) {
    const Vertex hub = c.kernel.neighbors(leaf).front();
    hanging[hub].insert(hanging[hub].end(), cls.begin() + 1, cls.end());
  }
  auto host = [&c](int first, int last) {
    Bag bag;
    for (int j = first; j <= last; ++j) bag.push_back(c.kernel_map[j]);
    return bag;
  };
  std::vector<Bag> bags;
  for (int j = 0; j < half; ++j) {
    for (Vertex clone : hanging[j]) {
      Bag bag = host(0, j);
      bag.push_back(clone);
      bags.push_back(Sorted(bag));
    }
  }
  bags.push_back(Sorted(host(0, k - 1)));
  for (int j = half; j < k; ++j) {
    for (Vertex clone : hanging[j]) {
      Bag bag = host(j, k - 1);
      bag.push_back(clone);
      bags.push_back(Sorted(bag));
    }
  }
  return bags;
}

}  // namespace

int PathDecomposition::width() const {
  int largest = 0;
  for (const auto& bag : bags) {
    largest = std::max(largest, static_cast<int>(bag.size()));
  }
  return largest - 1;
}

PathDecomposition Decompose(const Certificate& cert) {
  std::vector<Violation> violations = ValidateProgram(cert);
  if (!violations.empty()) {
    const std::string what =
        "cannot decompose an invalid certificate: " +
        DescribeViolations(violations);
    throw CertificateError(what, std::move(violations));
  }
  PathDecomposition pd;
  if (const auto* k = std::get_if<KernelClonesCert>(&cert.body)) {
    pd.bags = KernelBags(*k);
  } else if (const auto* s = std::get_if<SpikedStrandCert>(&cert.body)) {
    pd.bags = StrandBags(*s);
  } else {
    pd.bags = NecklaceBags(std::get<SpikedNecklaceCert>(cert.body));
  }
  return pd;
}

DecompositionReport VerifyDecomposition(const Graph& g,
                                        const PathDecomposition& pd) {
  DecompositionReport report;
  auto add = [&report](std::string tag, std::string detail) {
    report.violations.push_back({std::move(tag), std::move(detail)});
  };
  const int n = g.order();
  const int count = static_cast<int>(pd.bags.size());
  // Bag indices holding each vertex, ascending.
  std::vector<std::vector<int>> where(n);
  for (int i = 0; i < count; ++i) {
    Bag bag = pd.bags[i];
    std::sort(bag.begin(), bag.end());
    for (std::size_t j = 0; j < bag.size(); ++j) {
      const Vertex v = bag[j];
      if (v < 0 || v >= n) {
        add("vertex-out-of-range",
            "bag " + std::to_string(i) + " holds " + std::to_string(v));
        continue;
      }
      if (j > 0 && bag[j - 1] == v) {
        add("duplicate-in-bag",
            "bag " + std::to_string(i) + " repeats " + std::to_string(v));
        continue;
      }
      where[v].push_back(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (where[v].empty()) {
      add("vertex-missing", "vertex " + std::to_string(v));
    } else if (where[v].back() - where[v].front() + 1 !=
               static_cast<int>(where[v].size())) {
      add("non-contiguous", "vertex " + std::to_string(v));
    }
  }
  for (const Edge& e : g.edges()) {
    const auto& a = where[e.u];
    const auto& b = where[e.v];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    if (common.empty()) {
      add("edge-uncovered", "edge {" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + "}");
    }
  }
  if (report.violations.empty()) report.width = pd.width();
  return report;
}

}  // namespace yfree
