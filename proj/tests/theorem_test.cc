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

#include "symtk/theorem.h"

#include <random>
#include <set>

#include "golden.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "symtk/error.h"
#include "symtk/group.h"
#include "symtk/search.h"

namespace symtk {
namespace {

std::vector<Permutation> S5Elements() { return Closure(S5Generators(), 1000); }

// phi with two images of phi(target) swapped.
GroupAction CorruptedAction(const Permutation& target, Point a, Point b) {
  return [=](const Permutation& g) {
    Permutation image = InducedAction(g);
    if (g != target) return image;
    std::vector<Point> images(image.images().begin(), image.images().end());
    std::swap(images[a], images[b]);
    return Permutation::FromImages(std::move(images));
  };
}

TEST(InducedActionTest, Examples) {
  EXPECT_EQ(InducedAction(Permutation::Identity(5)), Permutation::Identity(10));
  const Permutation rotation = InducedAction(Permutation::FromCycles(5, {{1, 2, 3, 4, 5}}));
  EXPECT_EQ(rotation[0], 6u);  // {1,2,3} -> {2,3,4}
  const Permutation swap = InducedAction(Permutation::FromCycles(5, {{1, 2}}));
  EXPECT_EQ(swap[3], 6u);  // {1,3,4} -> {2,3,4}
  EXPECT_EQ(swap[0], 0u);  // {1,2,3} fixed setwise
  EXPECT_THROW(InducedAction(Permutation::Identity(4)), Error);
}

TEST(InducedActionTest, GeneratorImagesGolden) {
  EXPECT_EQ(InducedAction(S5Generators()[0]).ToCycleString(), "(4 7)(5 8)(6 9)");
  EXPECT_EQ(InducedAction(S5Generators()[1]).ToCycleString(),
            "(1 7 10 6 3)(2 8 4 9 5)");
}

TEST(InducedActionTest, PreservesAdjacencyAndInverses) {
  const Graph g = PetersenSubsets();
  for (const Permutation& s : S5Elements()) {
    const Permutation image = InducedAction(s);
    for (const auto& [u, v] : g.Edges()) ASSERT_TRUE(g.HasEdge(image[u], image[v]));
    ASSERT_EQ(InducedAction(s.Inverse()), image.Inverse());
  }
}

TEST(InducedActionTest, ImageIsVertexAndEdgeTransitive) {
  std::vector<Permutation> image_gens;
  for (const Permutation& s : S5Generators()) image_gens.push_back(InducedAction(s));
  EXPECT_EQ(ComputeOrbit(image_gens, 0).size(), 10u);

  std::set<Edge> edge_orbit;
  for (const Permutation& s : Closure(image_gens, 1000)) {
    Point u = s[0], v = s[5];
    edge_orbit.insert({std::min(u, v), std::max(u, v)});
  }
  EXPECT_EQ(edge_orbit.size(), 15u);
}

TEST(HomomorphismTest, AllPairs) {
  const auto check = CheckHomomorphism(HomomorphismMode::kAllPairs);
  EXPECT_TRUE(check.holds);
  EXPECT_EQ(check.pairs_checked, 14400u);
}

TEST(HomomorphismTest, GeneratorsOnly) {
  const auto check = CheckHomomorphism(HomomorphismMode::kGeneratorsOnly);
  EXPECT_TRUE(check.holds);
  EXPECT_EQ(check.pairs_checked, 2u + 4u + 8u);

  const std::vector<Permutation> trivial{Permutation::Identity(5)};
  const auto small = CheckHomomorphism(HomomorphismMode::kGeneratorsOnly,
                                       trivial, InducedAction);
  EXPECT_TRUE(small.holds);
  EXPECT_EQ(small.pairs_checked, 3u);
}

TEST(HomomorphismTest, CorruptedActionFails) {
  const auto gens = S5Generators();
  const auto corrupted = CorruptedAction(gens[0], 0, 1);
  EXPECT_FALSE(CheckHomomorphism(HomomorphismMode::kAllPairs, gens, corrupted).holds);
  EXPECT_FALSE(
      CheckHomomorphism(HomomorphismMode::kGeneratorsOnly, gens, corrupted).holds);
}

TEST(KernelTest, Examples) {
  EXPECT_TRUE(CheckKernelTrivial());
  const auto gens = S5Generators();
  EXPECT_FALSE(CheckKernelTrivial(
      gens, [](const Permutation&) { return Permutation::Identity(10); }));
  EXPECT_TRUE(InducedAction(Permutation::Identity(5)).IsIdentity());
}

TEST(VerifyTheoremTest, Verified) {
  const VerificationReport r = VerifyTheorem();
  EXPECT_EQ(r.verdict, Verdict::kVerified);
  EXPECT_EQ(r.graph_stats.n, 10u);
  EXPECT_EQ(r.graph_stats.edges, 15u);
  EXPECT_EQ(r.graph_stats.regular_degree, 3u);
  EXPECT_EQ(r.graph_stats.girth, 5u);
  EXPECT_EQ(r.graph_stats.diameter, 2u);
  EXPECT_TRUE(r.phi_preserves_adjacency);
  EXPECT_EQ(r.homomorphism_checked, 14400u);
  EXPECT_TRUE(r.kernel_trivial);
  EXPECT_EQ(r.image_order, 120u);
  EXPECT_EQ(r.aut_order_search, 120u);
  EXPECT_FALSE(r.aut_order_brute.has_value());
}

TEST(VerifyTheoremTest, WithBruteForce) {
  VerifyOptions options;
  options.run_brute = true;
  options.brute_threads = 2;
  const VerificationReport r = VerifyTheorem(options);
  EXPECT_EQ(r.verdict, Verdict::kVerified);
  EXPECT_EQ(r.aut_order_brute, 120u);
  EXPECT_EQ(r.brute_permutations_scanned, 3628800u);
}

TEST(VerifyTheoremTest, ClassicWithDeletedEdgeIsFalsified) {
  Graph damaged = PetersenClassic();
  damaged.RemoveEdge(0, 1);
  VerifyOptions options;
  options.graph = damaged;
  options.run_brute = true;
  const VerificationReport r = VerifyTheorem(options);
  EXPECT_EQ(r.verdict, Verdict::kFalsified);
  EXPECT_NE(r.aut_order_brute, 120u);
  EXPECT_EQ(r.graph_stats.regular_degree, std::nullopt);
}

TEST(VerifyTheoremTest, MutationsAreFalsified) {
  std::mt19937_64 rng(90);
  const Graph petersen = PetersenSubsets();
  const auto edges = petersen.Edges();
  std::vector<Edge> non_edges;
  for (Point u = 0; u < 10; ++u) {
    for (Point v = u + 1; v < 10; ++v) {
      if (!petersen.HasEdge(u, v)) non_edges.emplace_back(u, v);
    }
  }
  for (int trial = 0; trial < 5; ++trial) {
    Graph deleted = petersen;
    const Edge e = edges[rng() % edges.size()];
    deleted.RemoveEdge(e.first, e.second);
    VerifyOptions a;
    a.graph = deleted;
    EXPECT_EQ(VerifyTheorem(a).verdict, Verdict::kFalsified);

    Graph added = petersen;
    const Edge f = non_edges[rng() % non_edges.size()];
    added.AddEdge(f.first, f.second);
    VerifyOptions b;
    b.graph = added;
    EXPECT_EQ(VerifyTheorem(b).verdict, Verdict::kFalsified);

    const auto gens = S5Generators();
    const Permutation& target = gens[rng() % gens.size()];
    const Point x = static_cast<Point>(rng() % 10);
    const Point y = static_cast<Point>((x + 1 + rng() % 9) % 10);
    VerifyOptions c;
    c.action = CorruptedAction(target, x, y);
    EXPECT_EQ(VerifyTheorem(c).verdict, Verdict::kFalsified);
  }
}

TEST(ReportTest, JsonKeysAndGolden) {
  VerifyOptions options;
  options.run_brute = true;
  const auto report = VerifyTheorem(options);
  auto doc = nlohmann::ordered_json::parse(ReportToJson(report));
  std::vector<std::string> keys;
  for (const auto& [key, value] : doc.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{
                      "graph_stats", "phi_generator_images",
                      "homomorphism_checked", "kernel_trivial", "image_order",
                      "aut_order_search", "aut_order_brute", "verdict",
                      "timings"}));
  for (auto& [phase, ms] : doc["timings"].items()) {
    EXPECT_GE(ms.get<double>(), 0.0) << phase;
    ms = 0;
  }
  EXPECT_EQ(doc.dump(2) + "\n", testing::ReadGolden("verify_report.json"));
}

TEST(ReportTest, NullBruteWhenNotRun) {
  auto doc = nlohmann::json::parse(ReportToJson(VerifyTheorem()));
  EXPECT_TRUE(doc["aut_order_brute"].is_null());
  EXPECT_EQ(doc["verdict"], "VERIFIED");
}

TEST(ReportTest, SummaryGolden) {
  VerifyOptions options;
  options.run_brute = true;
  EXPECT_EQ(FormatSummary(VerifyTheorem(options)),
            testing::ReadGolden("verify_summary_brute.txt"));
}

}  // namespace
}  // namespace symtk
