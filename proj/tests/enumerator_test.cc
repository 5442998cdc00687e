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
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "oracles.h"
#include "yfree/canonical.h"
#include "yfree/certificate.h"
#include "yfree/enumerator.h"
#include "yfree/graph.h"
#include "yfree/graph_io.h"
#include "yfree/recognizer.h"

namespace yfree {
namespace {

TEST(OracleCensusTest, SmallOrders) {
  const CensusRow three = RunOracleCensus(3).row();
  EXPECT_EQ(three.unlabeled_connected, 2u);
  EXPECT_EQ(three.unlabeled_yfree, 2u);
  const OracleCensus six = RunOracleCensus(6);
  EXPECT_EQ(six.unlabeled_connected, 112u);
  EXPECT_EQ(six.yfree_forms.size(), six.unlabeled_connected);
  EXPECT_EQ(six.labeled_yfree, six.labeled_connected);
  EXPECT_EQ(six.labeled_connected, 26704u);
}

TEST(OracleCensusTest, ShardingDoesNotChangeTheResult) {
  const OracleCensus one = RunOracleCensus(6, 1);
  const OracleCensus three = RunOracleCensus(6, 3);
  EXPECT_EQ(one.yfree_forms, three.yfree_forms);
  EXPECT_EQ(one.labeled_yfree, three.labeled_yfree);
  EXPECT_EQ(one.labeled_connected, three.labeled_connected);
}

// Recorded from the exhaustive census: Y itself is among the excluded.
TEST(OracleCensusTest, SevenVertices) {
  const OracleCensus seven = RunOracleCensus(7, 2);
  EXPECT_EQ(seven.unlabeled_connected, 853u);
  EXPECT_EQ(seven.yfree_forms.size(), 191u);
  EXPECT_EQ(seven.labeled_connected, 1866256u);
  EXPECT_EQ(seven.labeled_yfree, 316669u);
  EXPECT_EQ(seven.yfree_forms.count(CanonicalForm(SubdividedClaw())), 0u);
}

TEST(OracleCensusTest, OrderBound) {
  EXPECT_THROW(RunOracleCensus(kOracleCensusBound + 1), OrderBoundError);
}

TEST(EnumerateTest, Examples) {
  EXPECT_EQ(EnumerateYFree(1), std::set<std::string>{"@"});
  EXPECT_EQ(EnumerateYFree(4), RunOracleCensus(4).yfree_forms);
  EXPECT_EQ(EnumerateYFree(4).size(), 6u);
  EXPECT_THROW(EnumerateYFree(kEnumerationBound + 1), OrderBoundError);
}

TEST(EnumerateTest, KernelsAreTheSmallConnectedGraphs) {
  std::size_t expected = 0;
  for (int n = 1; n <= 6; ++n) expected += RunOracleCensus(n).unlabeled_connected;
  EXPECT_EQ(ConnectedKernels().size(), expected);
}

TEST(EnumerateTest, BeadProgramsHaveTheRequestedOrder) {
  for (int n = 2; n <= 9; ++n) {
    for (const BeadProgram& p : BeadPrograms(n)) {
      EXPECT_EQ(ProgramOrder(p), n);
      const Certificate c = Allocate(p);
      EXPECT_TRUE(ValidateProgram(c).empty());
      EXPECT_EQ(Realize(c).order(), n);
    }
  }
}

// Each enumerated form is connected, Y-free per the oracle and certified by
// the recognizer. The counts beyond the census are recorded for regression.
TEST(EnumerateTest, LargerOrdersAreYFree) {
  const std::vector<std::size_t> counts = {524, 1407, 3829};
  for (int n = 8; n <= 10; ++n) {
    const std::set<std::string> forms = EnumerateYFree(n);
    EXPECT_EQ(forms.size(), counts[n - 8]);
    for (const std::string& form : forms) {
      const Graph g = ParseGraph6(form);
      ASSERT_EQ(CanonicalForm(g), form);
      EXPECT_TRUE(oracle::Connected(g));
      EXPECT_FALSE(oracle::HasY(g)) << form;
      EXPECT_TRUE(VerifyCertificate(Recognize(g).certificate(), g));
    }
  }
}

#ifdef YFREE_CENSUS_N8
TEST(EnumerateTest, MatchesTheEightVertexCensus) {
  const OracleCensus eight = RunOracleCensus(8, 4);
  EXPECT_EQ(EnumerateYFree(8), eight.yfree_forms);
  EXPECT_EQ(LabeledCount(8), BigInt(eight.labeled_yfree));
}
#endif

TEST(LabeledCountTest, Examples) {
  EXPECT_EQ(LabeledCount(1), 1);
  EXPECT_EQ(LabeledCount(3), 4);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(LabeledCount(n), BigInt(RunOracleCensus(n).labeled_yfree));
  }
  EXPECT_EQ(LabeledCount(10), BigInt(3076744750ULL));
}

TEST(LabeledCountTest, OrbitSumByBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    BigInt total = 0;
    for (const std::string& form : EnumerateYFree(n)) {
      const Graph g = ParseGraph6(form);
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::set<std::vector<Edge>> images;
      do {
        images.insert(g.Permuted(perm).edges());
      } while (std::next_permutation(perm.begin(), perm.end()));
      total += images.size();
    }
    EXPECT_EQ(LabeledCount(n), total);
  }
}

TEST(GrowthTest, Examples) {
  const std::vector<CensusRow> rows = GrowthEstimate(9);
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_DOUBLE_EQ(rows[0].growth_point, 1.0);
  EXPECT_NEAR(rows[2].growth_point, std::cbrt(4.0 / 6.0), 1e-12);
  for (const CensusRow& row : rows) {
    EXPECT_FALSE(row.unlabeled_connected.has_value());
    EXPECT_EQ(row.labeled_yfree, LabeledCount(row.n));
  }
  EXPECT_NEAR(GrowthPoint(3, 4), std::cbrt(4.0 / 6.0), 1e-12);
}

TEST(DeltaTest, Root) {
  const DeltaSolution d = SolveDelta();
  EXPECT_NEAR(d.delta, 2.25159, 1e-4);
  const double z = 1.0 / d.delta;
  EXPECT_LE(std::fabs((z + z * z) * std::exp(z) - 1.0), 1e-10);
  EXPECT_LE(d.residual, 1e-10);
  EXPECT_NEAR(d.z, z, 1e-15);
  // The root is bracketed by f(0) = 0 < 1 < f(1) = 2e.
  auto f = [](double x) { return (x + x * x) * std::exp(x); };
  EXPECT_LT(f(0.0), 1.0);
  EXPECT_GT(f(1.0), 1.0);
  EXPECT_DOUBLE_EQ(f(1.0), 2.0 * std::exp(1.0));
}

}  // namespace
}  // namespace yfree
