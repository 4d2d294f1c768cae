// Copyright 2026 The symtk Authors.
//
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

#include "symtk/graph.h"

#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "symtk/error.h"
#include "test_util.h"

namespace symtk {
namespace {

using ::symtk::testing::CompleteGraph;
using ::symtk::testing::CycleGraph;
using ::symtk::testing::PathGraph;
using ::symtk::testing::RandomGraph;
using ::symtk::testing::RandomPermutation;

void ExpectSymmetricLoopFree(const Graph& g) {
  for (Point u = 0; u < g.n(); ++u) {
    EXPECT_FALSE(g.HasEdge(u, u));
    for (Point v = 0; v < g.n(); ++v) EXPECT_EQ(g.HasEdge(u, v), g.HasEdge(v, u));
  }
}

TEST(SubsetsTest, Petersen) {
  const auto s = Subsets(5, 3);
  ASSERT_EQ(s.size(), 10u);
  EXPECT_EQ(s.front().ToString(), "{1,2,3}");
  EXPECT_EQ(s.back().ToString(), "{3,4,5}");
}

TEST(SubsetsTest, SmallCases) {
  const auto all = Subsets(3, 3);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].ToString(), "{1,2,3}");

  const auto pairs = Subsets(4, 2);
  ASSERT_EQ(pairs.size(), 6u);
  EXPECT_EQ(pairs[0].ToString(), "{1,2}");
  EXPECT_EQ(pairs[5].ToString(), "{3,4}");

  const auto empty = Subsets(4, 0);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].ToString(), "{}");
}

TEST(SubsetsTest, LexicographicAndComplete) {
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto s = Subsets(n, k);
      std::size_t binomial = 1;
      for (int i = 0; i < k; ++i) binomial = binomial * (n - i) / (i + 1);
      ASSERT_EQ(s.size(), binomial);
      for (std::size_t i = 1; i < s.size(); ++i) {
        ASSERT_LT(s[i - 1].members, s[i].members);
      }
    }
  }
}

TEST(SubsetsTest, Errors) {
  EXPECT_THROW(Subsets(3, 4), Error);
  EXPECT_THROW(Subsets(3, -1), Error);
  EXPECT_THROW(Subsets(0, 0), Error);
}

TEST(JohnsonTest, Examples) {
  const Graph petersen = JohnsonGeneral(5, 3, 1);
  EXPECT_EQ(petersen.n(), 10u);
  EXPECT_EQ(EdgeCount(petersen), 15u);
  EXPECT_EQ(IsRegular(petersen), 3u);

  const Graph j532 = JohnsonGeneral(5, 3, 2);
  EXPECT_EQ(j532.n(), 10u);
  EXPECT_EQ(EdgeCount(j532), 30u);
  EXPECT_EQ(IsRegular(j532), 6u);

  EXPECT_EQ(EdgeCount(JohnsonGeneral(5, 3, 0)), 0u);
}

TEST(JohnsonTest, ComplementOfPetersen) {
  const Graph p = JohnsonGeneral(5, 3, 1);
  const Graph q = JohnsonGeneral(5, 3, 2);
  for (Point u = 0; u < 10; ++u) {
    for (Point v = u + 1; v < 10; ++v) EXPECT_NE(p.HasEdge(u, v), q.HasEdge(u, v));
  }
}

TEST(JohnsonTest, Errors) {
  EXPECT_THROW(JohnsonGeneral(5, 3, 3), Error);
  EXPECT_THROW(JohnsonGeneral(5, 6, 1), Error);
  EXPECT_THROW(JohnsonGeneral(5, 3, -1), Error);
}

TEST(KneserTest, Examples) {
  const Graph k52 = Kneser(5, 2);
  EXPECT_EQ(k52.n(), 10u);
  EXPECT_EQ(EdgeCount(k52), 15u);
  EXPECT_EQ(IsRegular(k52), 3u);

  const Graph k21 = Kneser(2, 1);
  EXPECT_EQ(k21.n(), 2u);
  EXPECT_EQ(EdgeCount(k21), 1u);

  // 2k > n: still a graph, just edgeless.
  EXPECT_EQ(EdgeCount(Kneser(5, 3)), 0u);
}

TEST(PetersenTest, SubsetModel) {
  const Graph g = PetersenSubsets();
  ASSERT_TRUE(g.labels().has_value());
  EXPECT_EQ((*g.labels())[0], "{1,2,3}");
  EXPECT_EQ(g.Neighbors(0), (std::vector<Point>{5, 8, 9}));
  EXPECT_EQ((*g.labels())[5], "{1,4,5}");
  EXPECT_EQ((*g.labels())[8], "{2,4,5}");
  EXPECT_EQ((*g.labels())[9], "{3,4,5}");
  EXPECT_FALSE(g.HasEdge(0, 1));  // {1,2,3} and {1,2,4} share two points
}

TEST(PetersenTest, Invariants) {
  for (const Graph& g : {PetersenSubsets(), PetersenClassic(), Kneser(5, 2)}) {
    EXPECT_EQ(g.n(), 10u);
    EXPECT_EQ(EdgeCount(g), 15u);
    EXPECT_EQ(IsRegular(g), 3u);
    EXPECT_EQ(Girth(g), 5u);
    EXPECT_EQ(Diameter(g), 2u);
    EXPECT_TRUE(IsConnected(g));
    EXPECT_FALSE(IsBipartite(g));
    ExpectSymmetricLoopFree(g);
  }
}

TEST(PetersenTest, ClassicEdges) {
  const Graph g = PetersenClassic();
  for (Point i = 0; i < 5; ++i) {
    EXPECT_TRUE(g.HasEdge(i, (i + 1) % 5));
    EXPECT_TRUE(g.HasEdge(i, i + 5));
  }
  for (auto [u, v] : std::vector<Edge>{{5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}) {
    EXPECT_TRUE(g.HasEdge(u, v));
  }
}

TEST(InvariantsTest, SmallGraphs) {
  const Graph edgeless(4);
  EXPECT_EQ(EdgeCount(edgeless), 0u);
  EXPECT_EQ(IsRegular(edgeless), 0u);
  EXPECT_EQ(Girth(edgeless), std::nullopt);
  EXPECT_EQ(Diameter(edgeless), std::nullopt);

  const Graph path3 = PathGraph(3);
  EXPECT_EQ(DegreeSequence(path3), (std::vector<std::size_t>{1, 1, 2}));
  EXPECT_EQ(IsRegular(path3), std::nullopt);

  const Graph c5 = CycleGraph(5);
  EXPECT_EQ(Girth(c5), 5u);
  EXPECT_EQ(Diameter(c5), 2u);

  const Graph path4 = PathGraph(4);
  EXPECT_EQ(Girth(path4), std::nullopt);
  EXPECT_EQ(Diameter(path4), 3u);

  EXPECT_EQ(Girth(CompleteGraph(4)), 3u);
  EXPECT_EQ(Girth(CycleGraph(4)), 4u);
  EXPECT_TRUE(IsBipartite(CycleGraph(6)));
  EXPECT_EQ(Diameter(Graph(1)), 0u);
}

TEST(GraphTest, EdgeErrorsAndLabels) {
  Graph g(3);
  EXPECT_THROW(g.AddEdge(0, 0), Error);
  EXPECT_THROW(g.AddEdge(0, 3), Error);
  EXPECT_THROW(g.SetLabels({"a", "b"}), Error);
  EXPECT_THROW(g.SetLabels({"a", "b", "a"}), Error);
  g.SetLabels({"a", "b", "c"});
  EXPECT_EQ((*g.labels())[2], "c");
  g.AddEdge(0, 2);
  g.RemoveEdge(2, 0);
  EXPECT_EQ(EdgeCount(g), 0u);
}

TEST(GraphTest, WideGraphsUseSeveralWords) {
  Graph g(130);
  g.AddEdge(0, 129);
  g.AddEdge(64, 65);
  EXPECT_TRUE(g.HasEdge(129, 0));
  EXPECT_EQ(g.Neighbors(64), (std::vector<Point>{65}));
  EXPECT_EQ(EdgeCount(g), 2u);
}

TEST(PermuteGraphTest, Laws) {
  const Graph g = PetersenSubsets();
  EXPECT_EQ(PermuteGraph(g, Permutation::Identity(10)), g);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const Permutation s = RandomPermutation(rng, 10);
    const Graph h = PermuteGraph(g, s);
    EXPECT_EQ(EdgeCount(h), 15u);
    ExpectSymmetricLoopFree(h);
    EXPECT_EQ(PermuteGraph(h, s.Inverse()), g);
    for (Point v = 0; v < 10; ++v) EXPECT_EQ((*h.labels())[s[v]], (*g.labels())[v]);
  }
  EXPECT_THROW(PermuteGraph(g, Permutation::Identity(9)), Error);
}

TEST(IsAutomorphismTest, Examples) {
  const Graph g = PetersenSubsets();
  EXPECT_TRUE(IsAutomorphism(g, Permutation::Identity(10)));
  // (1 2) on the ground set, hand-computed on the lexicographic subsets:
  // {1,3,4} <-> {2,3,4}, {1,3,5} <-> {2,3,5}, {1,4,5} <-> {2,4,5}.
  EXPECT_TRUE(IsAutomorphism(g, Permutation::FromCycles(10, {{4, 7}, {5, 8}, {6, 9}})));
  EXPECT_FALSE(IsAutomorphism(g, Permutation::FromCycles(10, {{1, 2}})));
  EXPECT_THROW(IsAutomorphism(g, Permutation::Identity(5)), Error);
}

TEST(IsAutomorphismTest, AgreesWithPermutedAdjacency) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 9;
    const Graph g = RandomGraph(rng, n, 0.5);
    const Permutation s = RandomPermutation(rng, n);
    EXPECT_EQ(IsAutomorphism(g, s), PermuteGraph(g, s).SameAdjacency(g));
  }
}

}  // namespace
}  // namespace symtk
