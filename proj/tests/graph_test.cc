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
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.h"
#include "yfree/blocks.h"
#include "yfree/canonical.h"
#include "yfree/graph.h"
#include "yfree/graph_io.h"

namespace yfree {
namespace {

Graph RandomGraph(std::mt19937_64& rng, int n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph RandomRelabel(std::mt19937_64& rng, const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.Permuted(perm);
}

TEST(GraphTest, RejectsLoopsRepeatsAndRange) {
  EXPECT_THROW(Graph(2, {{0, 0}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 2}}), GraphError);
}

TEST(GraphTest, EdgesAreSortedUnorderedPairs) {
  const Graph g(3, {{2, 1}, {1, 0}});
  ASSERT_EQ(g.edges().size(), 2u);
  EXPECT_EQ(g.edges()[0], Edge(0, 1));
  EXPECT_EQ(g.edges()[1], Edge(1, 2));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(GraphTest, NamedGraphs) {
  EXPECT_EQ(PathGraph(4).size(), 3u);
  EXPECT_EQ(CycleGraph(5).size(), 5u);
  EXPECT_EQ(CompleteGraph(5).size(), 10u);
  EXPECT_EQ(StarGraph(4).degree(0), 4);
  EXPECT_EQ(CompleteBipartite(2, 3).size(), 6u);
  const Graph y = SubdividedClaw();
  EXPECT_EQ(y.order(), 7);
  EXPECT_EQ(y.degree(0), 3);
  EXPECT_TRUE(y.has_edge(5, 6));
}

TEST(Graph6Test, DecodesHandEncodedGraphs) {
  EXPECT_EQ(ParseGraph6("Bw"), CompleteGraph(3));
  EXPECT_EQ(ParseGraph6("Bg"), PathGraph(3));
  EXPECT_EQ(ParseGraph6("@"), Graph(1));
  EXPECT_EQ(ParseGraph6(">>graph6<<Bw\n"), CompleteGraph(3));
}

TEST(Graph6Test, Encodes) {
  EXPECT_EQ(EmitGraph6(Graph(1)), "@");
  EXPECT_EQ(EmitGraph6(CompleteGraph(3)), "Bw");
  const Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(ParseGraph6(EmitGraph6(c4)), c4);
}

TEST(Graph6Test, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Graph g = RandomGraph(rng, i % 80, 0.3);
    EXPECT_EQ(ParseGraph6(EmitGraph6(g)), g);
  }
}

TEST(Graph6Test, LongOrderHeader) {
  const Graph g = PathGraph(100);
  const std::string text = EmitGraph6(g);
  EXPECT_EQ(text[0], '~');
  EXPECT_EQ(ParseGraph6(text), g);
}

TEST(Graph6Test, RejectsMalformedInput) {
  EXPECT_THROW(ParseGraph6(""), ParseError);
  EXPECT_THROW(ParseGraph6("B"), ParseError);
  EXPECT_THROW(ParseGraph6("Bww"), ParseError);
  EXPECT_THROW(ParseGraph6("B\x01"), ParseError);
  try {
    ParseGraph6("Bw!");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GE(e.offset(), 2u);
  }
}

TEST(Graph6Test, ParsesLines) {
  const std::vector<Graph> graphs = ParseGraph6Lines("Bw\n\n@\nBg\n");
  ASSERT_EQ(graphs.size(), 3u);
  EXPECT_EQ(graphs[1], Graph(1));
}

TEST(EdgeListTest, Examples) {
  EXPECT_EQ(ParseEdgeList("3 2\n0 1\n1 2"), PathGraph(3));
  EXPECT_EQ(ParseEdgeList("1 0"), Graph(1));
  EXPECT_THROW(ParseEdgeList("3 2\n0 1"), ParseError);
  EXPECT_THROW(ParseEdgeList("3 1\n0 0"), ParseError);
  EXPECT_THROW(ParseEdgeList("3 1\n0 5"), ParseError);
  EXPECT_THROW(ParseEdgeList("3 2\n0 1\n1 0"), ParseError);
  const Graph g = CompleteBipartite(3, 4);
  EXPECT_EQ(ParseEdgeList(EmitEdgeList(g)), g);
}

TEST(DotTest, OneStatementPerEdge) {
  const std::string dot = ToDot(PathGraph(3));
  int statements = 0;
  for (std::size_t at = dot.find("--"); at != std::string::npos;
       at = dot.find("--", at + 2)) {
    ++statements;
  }
  EXPECT_EQ(statements, 2);
}

TEST(ComponentsTest, Examples) {
  EXPECT_EQ(ConnectedComponents(CompleteGraph(3)),
            (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
  EXPECT_EQ(ConnectedComponents(Graph(3, {{1, 2}})),
            (std::vector<std::vector<Vertex>>{{0}, {1, 2}}));
  EXPECT_TRUE(ConnectedComponents(Graph(0)).empty());
}

TEST(ComponentsTest, AgreesWithUnionFind) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const Graph g = RandomGraph(rng, 1 + i % 12, 0.15);
    EXPECT_EQ(IsConnected(g), oracle::Connected(g));
  }
}

TEST(BlocksTest, Examples) {
  const BlockDecomposition p3 = BlocksAndCutVertices(PathGraph(3));
  EXPECT_EQ(p3.blocks, (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(p3.cut_vertices, std::vector<Vertex>{1});

  const BlockDecomposition k4 = BlocksAndCutVertices(CompleteGraph(4));
  EXPECT_EQ(k4.blocks.size(), 1u);
  EXPECT_TRUE(k4.cut_vertices.empty());

  const Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
  const BlockDecomposition b = BlocksAndCutVertices(bowtie);
  EXPECT_EQ(b.blocks.size(), 2u);
  EXPECT_EQ(b.cut_vertices, std::vector<Vertex>{2});
  EXPECT_EQ(b.BlocksOf(2).size(), 2u);

  EXPECT_THROW(BlocksAndCutVertices(Graph(2)), GraphError);
}

// Every edge in exactly one block; the block-cut tree is a tree.
TEST(BlocksTest, Properties) {
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 300) {
    const Graph g = RandomGraph(rng, 2 + checked % 14, 0.25);
    if (!IsConnected(g)) continue;
    ++checked;
    const BlockDecomposition d = BlocksAndCutVertices(g);
    for (const Edge& e : g.edges()) {
      int holders = 0;
      for (const auto& block : d.blocks) {
        holders += std::binary_search(block.begin(), block.end(), e.u) &&
                   std::binary_search(block.begin(), block.end(), e.v);
      }
      EXPECT_EQ(holders, 1);
    }
    const int nodes =
        static_cast<int>(d.blocks.size() + d.cut_vertices.size());
    EXPECT_EQ(static_cast<int>(d.block_cut_edges.size()), nodes - 1);
    std::vector<int> parent(nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    for (const auto& [block, cut] : d.block_cut_edges) {
      const int c = static_cast<int>(d.blocks.size()) +
                    static_cast<int>(std::lower_bound(d.cut_vertices.begin(),
                                                      d.cut_vertices.end(),
                                                      cut) -
                                     d.cut_vertices.begin());
      const int a = find(block), b = find(c);
      EXPECT_NE(a, b);
      parent[a] = b;
    }
  }
}

TEST(CanonicalTest, Examples) {
  const Graph p3a(3, {{0, 1}, {1, 2}});
  const Graph p3b(3, {{2, 0}, {0, 1}});
  EXPECT_EQ(CanonicalForm(p3a), CanonicalForm(p3b));
  EXPECT_NE(CanonicalForm(p3a), CanonicalForm(CompleteGraph(3)));
}

TEST(CanonicalTest, AllLabelingsOfThePaw) {
  const Graph paw(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  std::vector<int> perm = {0, 1, 2, 3};
  std::set<std::string> forms;
  do {
    forms.insert(CanonicalForm(paw.Permuted(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  EXPECT_EQ(forms.size(), 1u);
}

// Canonical forms partition graphs exactly as brute-force relabeling does.
TEST(CanonicalTest, AgreesWithPermutationOracle) {
  std::mt19937_64 rng(17);
  std::map<std::string, std::string> ours_to_oracle, oracle_to_ours;
  for (int i = 0; i < 600; ++i) {
    const int n = 1 + i % 7;
    const Graph g = RandomGraph(rng, n, 0.2 + 0.1 * (i % 5));
    const std::string ours = CanonicalForm(g);
    const std::string theirs = oracle::PermutationCanonical(g);
    EXPECT_EQ(CanonicalForm(RandomRelabel(rng, g)), ours);
    auto [a, fresh_a] = ours_to_oracle.emplace(ours, theirs);
    auto [b, fresh_b] = oracle_to_ours.emplace(theirs, ours);
    EXPECT_EQ(a->second, theirs);
    EXPECT_EQ(b->second, ours);
  }
}

TEST(CanonicalTest, LabelingRealizesTheForm) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 200; ++i) {
    const Graph g = RandomGraph(rng, 1 + i % 12, 0.3);
    EXPECT_EQ(EmitGraph6(g.Permuted(CanonicalLabeling(g))), CanonicalForm(g));
  }
}

TEST(CanonicalTest, OrderBound) {
  EXPECT_THROW(CanonicalForm(PathGraph(kCanonicalBound + 1)), OrderBoundError);
  EXPECT_NO_THROW(CanonicalForm(PathGraph(20), 20));
}

std::uint64_t BruteAutomorphisms(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    count += g.Permuted(perm) == g;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

TEST(AutomorphismTest, Examples) {
  EXPECT_EQ(AutomorphismCount(CompleteGraph(3)), 6u);
  EXPECT_EQ(AutomorphismCount(PathGraph(3)), 2u);
  EXPECT_EQ(AutomorphismCount(SubdividedClaw()),
            BruteAutomorphisms(SubdividedClaw()));
  EXPECT_EQ(AutomorphismCount(SubdividedClaw()), 6u);
  EXPECT_EQ(AutomorphismCount(StarGraph(9)), 362880u);
  EXPECT_EQ(AutomorphismCount(CycleGraph(10)), 20u);
}

TEST(AutomorphismTest, AgreesWithBruteForce) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 150; ++i) {
    const Graph g = RandomGraph(rng, 1 + i % 7, 0.4);
    EXPECT_EQ(AutomorphismCount(g), BruteAutomorphisms(g)) << EmitGraph6(g);
  }
}

TEST(TreeTest, Examples) {
  EXPECT_TRUE(IsCaterpillar(PathGraph(5)));
  EXPECT_TRUE(IsCaterpillar(StarGraph(5)));
  EXPECT_TRUE(IsTree(SubdividedClaw()));
  EXPECT_FALSE(IsCaterpillar(SubdividedClaw()));
  EXPECT_FALSE(IsTree(CycleGraph(4)));
  EXPECT_FALSE(IsCaterpillar(CycleGraph(4)));
  EXPECT_TRUE(IsTree(Graph(1)));
}

}  // namespace
}  // namespace yfree
