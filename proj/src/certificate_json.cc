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


#include "yfree/certificate_json.h"

#include <charconv>

namespace yfree {
namespace {

using nlohmann::json;

json BeadToJson(const BeadInstance& b) {
  return json{{"kind", BeadKindName(b.kind)},
              {"t", b.t},
              {"primaries", b.primaries},
              {"secondaries", b.secondaries}};
}

json SpikesToJson(const std::map<Vertex, std::vector<Vertex>>& spikes) {
  json out = json::object();
  for (const auto& [key, leaves] : spikes) out[std::to_string(key)] = leaves;
  return out;
}

Vertex KeyToVertex(const std::string& key) {
  Vertex v = 0;
  const char* end = key.data() + key.size();
  auto [ptr, ec] = std::from_chars(key.data(), end, v);
  if (ec != std::errc() || ptr != end || key.empty()) {
    throw CertificateFormatError("object key '" + key +
                                 "' is not a vertex id");
  }
  return v;
}

std::map<Vertex, std::vector<Vertex>> SpikesFromJson(const json& doc) {
  if (!doc.is_object()) {
    throw CertificateFormatError("expected an object of vertex lists");
  }
  std::map<Vertex, std::vector<Vertex>> out;
  for (const auto& [key, leaves] : doc.items()) {
    out[KeyToVertex(key)] = leaves.get<std::vector<Vertex>>();
  }
  return out;
}

BeadInstance BeadFromJson(const json& doc) {
  BeadInstance b;
  const std::string kind = doc.at("kind").get<std::string>();
  auto parsed = BeadKindFromName(kind);
  if (!parsed) throw CertificateFormatError("unknown bead kind '" + kind + "'");
  b.kind = *parsed;
  b.t = doc.at("t").get<int>();
  b.primaries = doc.at("primaries").get<std::vector<Vertex>>();
  b.secondaries = doc.at("secondaries").get<std::vector<Vertex>>();
  return b;
}

std::vector<BeadInstance> BeadsFromJson(const json& doc) {
  if (!doc.is_array()) throw CertificateFormatError("beads must be an array");
  std::vector<BeadInstance> beads;
  for (const json& b : doc) beads.push_back(BeadFromJson(b));
  return beads;
}

}  // namespace

json CertificateToJson(const Certificate& cert) {
  json out{{"type", CertificateTypeName(cert)}, {"n", cert.n}};
  if (const auto* k = std::get_if<KernelClonesCert>(&cert.body)) {
    json edges = json::array();
    for (const Edge& e : k->kernel.edges()) edges.push_back({e.u, e.v});
    json clones = json::object();
    for (const auto& [leaf, cls] : k->clones) {
      clones[std::to_string(leaf)] = cls;
    }
    out["kernel"] = json{{"n", k->kernel.order()},
                         {"edges", edges},
                         {"map", k->kernel_map},
                         {"clones", clones}};
    return out;
  }
  const bool strand = cert.body.index() == 1;
  const auto& beads = strand ? std::get<SpikedStrandCert>(cert.body).beads
                             : std::get<SpikedNecklaceCert>(cert.body).beads;
  const auto& spikes = strand ? std::get<SpikedStrandCert>(cert.body).spikes
                              : std::get<SpikedNecklaceCert>(cert.body).spikes;
  json list = json::array();
  for (const BeadInstance& b : beads) list.push_back(BeadToJson(b));
  out["beads"] = list;
  out["spikes"] = SpikesToJson(spikes);
  return out;
}

Certificate CertificateFromJson(const json& doc) {
  try {
    if (!doc.is_object()) {
      throw CertificateFormatError("certificate must be a JSON object");
    }
    Certificate cert;
    cert.n = doc.at("n").get<int>();
    const std::string type = doc.at("type").get<std::string>();
    if (type == "kernel") {
      const json& k = doc.at("kernel");
      const int order = k.at("n").get<int>();
      if (order < 0) throw CertificateFormatError("kernel order is negative");
      std::vector<Edge> edges;
      for (const json& e : k.at("edges")) {
        const auto pair = e.get<std::vector<Vertex>>();
        if (pair.size() != 2) {
          throw CertificateFormatError("kernel edge must have two endpoints");
        }
        edges.emplace_back(pair[0], pair[1]);
      }
      KernelClonesCert body;
      body.kernel = Graph(order, edges);
      body.kernel_map = k.at("map").get<std::vector<Vertex>>();
      body.clones = SpikesFromJson(k.at("clones"));
      cert.body = std::move(body);
    } else if (type == "strand" || type == "necklace") {
      auto beads = BeadsFromJson(doc.at("beads"));
      auto spikes = doc.contains("spikes") ? SpikesFromJson(doc.at("spikes"))
                                           : SpikeMap{};
      if (type == "strand") {
        cert.body = SpikedStrandCert{std::move(beads), std::move(spikes)};
      } else {
        cert.body = SpikedNecklaceCert{std::move(beads), std::move(spikes)};
      }
    } else {
      throw CertificateFormatError("unknown certificate type '" + type + "'");
    }
    return cert;
  } catch (const json::exception& e) {
    throw CertificateFormatError(std::string("malformed certificate: ") +
                                 e.what());
  } catch (const GraphError& e) {
    throw CertificateFormatError(std::string("malformed kernel: ") + e.what());
  }
}

std::string SerializeCertificate(const Certificate& cert) {
  return CertificateToJson(cert).dump();
}

Certificate ParseCertificate(std::string_view text) {
  json doc = json::parse(text.begin(), text.end(), nullptr,
                         /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw CertificateFormatError("certificate is not valid JSON");
  }
  return CertificateFromJson(doc);
}

}  // namespace yfree
