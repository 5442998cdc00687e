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


#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "figures.h"
#include "oracles.h"
#include "yfree/canonical.h"
#include "yfree/certificate.h"
#include "yfree/certificate_json.h"
#include "yfree/graph.h"

namespace yfree {
namespace {

using K = BeadKind;

std::vector<std::string> Tags(const Certificate& cert) {
  std::vector<std::string> tags;
  for (const Violation& v : ValidateProgram(cert)) tags.push_back(v.tag);
  return tags;
}

bool HasTag(const Certificate& cert, const std::string& tag) {
  const std::vector<std::string> tags = Tags(cert);
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

Certificate Program(bool necklace, std::vector<BeadSpec> beads,
                    std::vector<int> spikes = {}) {
  return Allocate(BeadProgram{necklace, std::move(beads), std::move(spikes)});
}

Certificate StrandExampleCert() {
  SpikedStrandCert s;
  s.beads = {{K::kK4, 3, {3}, {0, 1, 2}},
             {K::kK211, 2, {3, 8}, {6, 7}},
             {K::kK11t, 4, {8, 10}, {11, 12, 13, 14}},
             {K::kK211, 2, {10, 17}, {15, 16}},
             {K::kK11t, 0, {17, 18}, {}}};
  s.spikes = {{3, {4, 5}}, {8, {9}}, {17, {19, 20}}};
  return Certificate{21, s};
}

Certificate NecklaceExampleCert() {
  SpikedNecklaceCert s;
  s.beads = {{K::kK11t, 2, {0, 1}, {4, 5}},
             {K::kK11t, 3, {1, 3}, {11, 12, 13}},
             {K::kK2t, 3, {3, 2}, {8, 9, 10}},
             {K::kK211, 2, {2, 0}, {6, 7}}};
  s.spikes = {{3, {14, 15}}, {2, {16}}, {0, {17}}};
  return Certificate{18, s};
}

TEST(BeadKindTest, NamesRoundTrip) {
  for (K kind : {K::kK4, K::kK211, K::kK11t, K::kK2t}) {
    EXPECT_EQ(BeadKindFromName(BeadKindName(kind)), kind);
  }
  EXPECT_FALSE(BeadKindFromName("K5").has_value());
}

TEST(ValidateTest, Examples) {
  EXPECT_TRUE(HasTag(Program(true, {{K::kK11t, 0}, {K::kK11t, 1}}),
                     "two-K11-necklace"));
  EXPECT_TRUE(HasTag(Program(false, {{K::kK11t, 0}, {K::kK4, 3}, {K::kK11t, 0}}),
                     "K4-not-at-end"));
  EXPECT_TRUE(Tags(Program(false, {{K::kK11t, 0}, {K::kK11t, 0}})).empty());
}

TEST(ValidateTest, BeadShapes) {
  EXPECT_TRUE(Tags(Program(false, {{K::kK11t, 1}})).empty());
  EXPECT_TRUE(Tags(Program(false, {{K::kK2t, 2}})).empty());
  EXPECT_TRUE(HasTag(Program(false, {{K::kK2t, 1}}), "bead-shape"));
  Certificate k4 = Program(false, {{K::kK4, 3}});
  std::get<SpikedStrandCert>(k4.body).beads[0].t = 2;
  EXPECT_TRUE(HasTag(k4, "bead-shape"));
}

TEST(ValidateTest, StrandRules) {
  EXPECT_TRUE(HasTag(Certificate{0, SpikedStrandCert{}}, "empty-strand"));
  // A spike at an end primary would itself be a K11t(0) bead.
  EXPECT_TRUE(HasTag(Program(false, {{K::kK11t, 1}, {K::kK11t, 0}}, {1}),
                     "spike-at-end-primary"));
  EXPECT_TRUE(Tags(Program(false, {{K::kK11t, 1}, {K::kK11t, 0}}, {0, 2}))
                  .empty());
  Certificate c = Program(false, {{K::kK11t, 0}, {K::kK11t, 0}});
  auto& strand = std::get<SpikedStrandCert>(c.body);
  strand.spikes[1] = {};
  EXPECT_TRUE(HasTag(c, "empty-spike"));
  strand.spikes.clear();
  strand.beads[1].primaries = {2, 0};
  strand.beads.push_back({K::kK11t, 0, {0, 1}, {}});
  EXPECT_TRUE(HasTag(c, "aux-not-path"));
}

TEST(ValidateTest, NecklaceRules) {
  EXPECT_TRUE(HasTag(Program(true, {{K::kK2t, 2}}), "short-necklace"));
  EXPECT_TRUE(HasTag(Program(true, {{K::kK4, 3}, {K::kK2t, 2}, {K::kK2t, 2}}),
                     "K4-in-necklace"));
  EXPECT_TRUE(Tags(Program(true, {{K::kK11t, 0}, {K::kK2t, 2}})).empty());
  EXPECT_TRUE(Tags(Program(true, {{K::kK11t, 0}, {K::kK11t, 0}, {K::kK11t, 0}},
                           {1, 0, 2}))
                  .empty());
  Certificate c = Program(true, {{K::kK11t, 0}, {K::kK11t, 0}, {K::kK11t, 0},
                                 {K::kK11t, 0}});
  std::get<SpikedNecklaceCert>(c.body).beads[3].primaries = {3, 1};
  EXPECT_TRUE(HasTag(c, "aux-not-cycle"));
}

TEST(ValidateTest, VertexCoverage) {
  Certificate c = Program(false, {{K::kK11t, 1}});
  c.n = 4;
  EXPECT_TRUE(HasTag(c, "vertex-uncovered"));
  c.n = 2;
  EXPECT_TRUE(HasTag(c, "vertex-out-of-range"));
  c.n = 3;
  std::get<SpikedStrandCert>(c.body).beads[0].secondaries = {1};
  EXPECT_TRUE(HasTag(c, "vertex-reused"));
}

TEST(ValidateTest, KernelRules) {
  EXPECT_TRUE(Tags(AllocateKernel(PathGraph(2), {{1, 7}})).empty());
  EXPECT_TRUE(HasTag(AllocateKernel(PathGraph(7), {}), "kernel-too-large"));
  EXPECT_TRUE(HasTag(AllocateKernel(Graph(2), {}), "kernel-disconnected"));
  EXPECT_TRUE(HasTag(AllocateKernel(PathGraph(3), {{1, 2}}), "cloned-non-leaf"));
  EXPECT_TRUE(HasTag(AllocateKernel(PathGraph(2), {{0, 2}, {1, 2}}),
                     "cloned-leaf-neighbor-cloned"));
  Certificate c = AllocateKernel(PathGraph(3), {{0, 2}});
  auto& body = std::get<KernelClonesCert>(c.body);
  body.clones[0] = {3, 1};
  EXPECT_TRUE(HasTag(c, "clone-class-mismatch"));
  body.clones[0] = {0, 3};
  body.kernel_map.pop_back();
  EXPECT_TRUE(HasTag(c, "kernel-map"));
}

TEST(RealizeTest, Examples) {
  EXPECT_EQ(Realize(Program(false, {{K::kK11t, 0}, {K::kK11t, 0}})),
            PathGraph(3));
  EXPECT_EQ(CanonicalForm(Realize(Program(true, {{K::kK11t, 0},
                                                 {K::kK11t, 0},
                                                 {K::kK11t, 0},
                                                 {K::kK11t, 0}}))),
            CanonicalForm(CycleGraph(4)));
  EXPECT_EQ(Realize(Program(false, {{K::kK4, 3}})), CompleteGraph(4));
  EXPECT_EQ(Realize(AllocateKernel(PathGraph(2), {{1, 7}})), StarGraph(7));
  EXPECT_THROW(Realize(Program(false, {{K::kK2t, 0}})), CertificateError);
}

TEST(RealizeTest, BeadEdges) {
  EXPECT_EQ(Realize(Program(false, {{K::kK211, 2}})).size(), 5u);
  EXPECT_EQ(Realize(Program(false, {{K::kK11t, 3}})).size(), 7u);
  EXPECT_EQ(CanonicalForm(Realize(Program(false, {{K::kK2t, 4}}))),
            CanonicalForm(CompleteBipartite(2, 4)));
}

TEST(RealizeTest, StrandProgramOfTheExampleIsYFree) {
  const Certificate c =
      Program(false,
              {{K::kK4, 3}, {K::kK211, 2}, {K::kK11t, 4}, {K::kK211, 2},
               {K::kK11t, 0}},
              {2, 1, 0, 2});
  EXPECT_TRUE(Tags(c).empty());
  const Graph g = Realize(c);
  EXPECT_EQ(g.order(), 21);
  EXPECT_FALSE(oracle::HasY(g));
  EXPECT_EQ(CanonicalForm(g, kSmallGraphCapacity),
            CanonicalForm(figures::SpikedStrandExample(), kSmallGraphCapacity));
}

TEST(VerifyTest, Examples) {
  const Certificate c4 = Program(
      true, {{K::kK11t, 0}, {K::kK11t, 0}, {K::kK11t, 0}, {K::kK11t, 0}});
  EXPECT_TRUE(VerifyCertificate(c4, Realize(c4)));
  EXPECT_FALSE(VerifyCertificate(c4, PathGraph(4)));
  EXPECT_FALSE(VerifyCertificate(c4, PathGraph(5)));
  EXPECT_TRUE(VerifyCertificate(AllocateKernel(PathGraph(2), {{1, 7}}),
                                StarGraph(7)));
  EXPECT_TRUE(VerifyCertificate(StrandExampleCert(),
                                figures::SpikedStrandExample()));
  EXPECT_TRUE(VerifyCertificate(NecklaceExampleCert(),
                                figures::SpikedNecklaceExample()));
  // Invalid certificates never verify, even when the edges match.
  Certificate bad = Program(false, {{K::kK11t, 1}, {K::kK11t, 0}}, {1});
  EXPECT_FALSE(VerifyCertificate(bad, Graph(bad.n, CertificateEdges(bad))));
}

TEST(VerifyTest, NecklaceExampleIsYFree) {
  EXPECT_FALSE(oracle::HasY(figures::SpikedNecklaceExample()));
}

TEST(JsonTest, RoundTrips) {
  for (const Certificate& c :
       {StrandExampleCert(), NecklaceExampleCert(),
        AllocateKernel(PathGraph(4), {{0, 3}}), Certificate{1, [] {
           KernelClonesCert k;
           k.kernel = Graph(1);
           k.kernel_map = {0};
           return k;
         }()}}) {
    const std::string text = SerializeCertificate(c);
    EXPECT_EQ(ParseCertificate(text), c) << text;
    EXPECT_EQ(SerializeCertificate(ParseCertificate(text)), text);
  }
}

TEST(JsonTest, Layout) {
  EXPECT_EQ(SerializeCertificate(Program(false, {{K::kK11t, 1}})),
            R"({"beads":[{"kind":"K11t","primaries":[0,1],"secondaries":[2],)"
            R"("t":1}],"n":3,"spikes":{},"type":"strand"})");
  EXPECT_EQ(SerializeCertificate(AllocateKernel(PathGraph(2), {{1, 2}})),
            R"({"kernel":{"clones":{"1":[1,2]},"edges":[[0,1]],"map":[0,1],)"
            R"("n":2},"n":3,"type":"kernel"})");
}

TEST(JsonTest, RejectsMalformedDocuments) {
  EXPECT_THROW(ParseCertificate("{"), CertificateFormatError);
  EXPECT_THROW(ParseCertificate(R"({"type":"ring","n":1})"),
               CertificateFormatError);
  EXPECT_THROW(ParseCertificate(
                   R"({"type":"strand","n":2,"beads":[{"kind":"K9","t":0,)"
                   R"("primaries":[0,1],"secondaries":[]}],"spikes":{}})"),
               CertificateFormatError);
  EXPECT_THROW(ParseCertificate(
                   R"({"type":"strand","n":2,"beads":[],"spikes":{"x":[1]}})"),
               CertificateFormatError);
}

}  // namespace
}  // namespace yfree
