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


// JSON form of certificates:
//
//   {"type": "kernel" | "strand" | "necklace", "n": N,
//    "beads": [{"kind": "K4"|"K211"|"K11t"|"K2t", "t": T,
//               "primaries": [...], "secondaries": [...]}, ...],
//    "spikes": {"<primary>": [leaf, ...], ...},
//    "kernel": {"n": K, "edges": [[u, v], ...], "map": [...],
//               "clones": {"<kernel leaf>": [host ids], ...}}}
//
// Strands and necklaces carry beads and spikes; kernels carry kernel. Keys
// are emitted sorted, so serialization is byte-stable.

#ifndef YFREE_CERTIFICATE_JSON_H_
#define YFREE_CERTIFICATE_JSON_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "yfree/certificate.h"

namespace yfree {

class CertificateFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

nlohmann::json CertificateToJson(const Certificate& cert);
// Throws CertificateFormatError on a missing field or a wrongly typed value.
// Structural validity is left to ValidateProgram.
Certificate CertificateFromJson(const nlohmann::json& doc);

std::string SerializeCertificate(const Certificate& cert);
Certificate ParseCertificate(std::string_view text);

}  // namespace yfree

#endif  // YFREE_CERTIFICATE_JSON_H_
