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

#ifndef SYMTK_THEOREM_H_
#define SYMTK_THEOREM_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symtk/graph.h"
#include "symtk/permutation.h"

namespace symtk {

// A map from permutations of the ground set to permutations of the vertices.
using GroupAction = std::function<Permutation(const Permutation&)>;

// (1 2) and (1 2 3 4 5) on {1..5}.
std::vector<Permutation> S5Generators();

// Action of g on the k-subsets of {1..g.degree()}: the vertex of subset A goes
// to the vertex of g(A). Vertex ids follow Subsets().
Permutation InducedSubsetAction(const Permutation& g, int k);

// InducedSubsetAction(g, 3) for g in S5: a permutation of the ten vertices of
// PetersenSubsets(). Throws kDegreeMismatch unless g.degree() == 5.
Permutation InducedAction(const Permutation& g);

enum class HomomorphismMode {
  // phi(g1 g2 ... gk) == phi(g1) phi(g2) ... phi(gk) for every word of
  // length 1 to 3 over the generators.
  kGeneratorsOnly,
  // phi(gh) == phi(g) phi(h) for all pairs of group elements.
  kAllPairs,
};

struct HomomorphismCheck {
  bool holds = false;
  std::uint64_t pairs_checked = 0;
};

HomomorphismCheck CheckHomomorphism(HomomorphismMode mode,
                                    std::span<const Permutation> generators,
                                    const GroupAction& action);
// Against InducedAction on S5.
HomomorphismCheck CheckHomomorphism(HomomorphismMode mode);

// True iff the identity is the only group element sent to the identity.
// Scans every element of the generated group.
bool CheckKernelTrivial(std::span<const Permutation> generators,
                        const GroupAction& action);
bool CheckKernelTrivial();

struct GraphStats {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::optional<std::size_t> regular_degree;
  std::optional<std::size_t> girth;
  std::optional<std::size_t> diameter;
};

enum class Verdict { kVerified, kFalsified };

struct PhaseTiming {
  std::string phase;
  double milliseconds = 0;
};

struct VerificationReport {
  GraphStats graph_stats;
  // (generator, image) in 1-based cycle notation.
  std::vector<std::pair<std::string, std::string>> phi_generator_images;
  // Every phi(g), g in S5, is an automorphism of the graph.
  bool phi_preserves_adjacency = false;
  bool homomorphism_holds = false;
  std::uint64_t homomorphism_checked = 0;
  bool kernel_trivial = false;
  std::uint64_t image_order = 0;
  std::uint64_t aut_order_search = 0;
  std::optional<std::uint64_t> aut_order_brute;
  std::optional<std::uint64_t> brute_permutations_scanned;
  Verdict verdict = Verdict::kFalsified;
  std::vector<PhaseTiming> timings;
};

struct VerifyOptions {
  bool run_brute = false;
  unsigned brute_threads = 1;
  // Replaces PetersenSubsets(). Used to confirm that a damaged graph is
  // rejected.
  std::optional<Graph> graph;
  // Replaces InducedAction.
  GroupAction action;
};

// Checks that phi = InducedAction is an injective homomorphism from S5 into
// Aut(PetersenSubsets()) whose image has order 120 = |Aut|, which makes phi
// an isomorphism. A failed check gives Verdict::kFalsified, not an error.
VerificationReport VerifyTheorem(const VerifyOptions& options = {});

const char* VerdictName(Verdict verdict);

// JSON with exactly the keys graph_stats, phi_generator_images,
// homomorphism_checked, kernel_trivial, image_order, aut_order_search,
// aut_order_brute, verdict and timings.
std::string ReportToJson(const VerificationReport& report);

// Line-oriented summary without timings, so it is byte-stable.
std::string FormatSummary(const VerificationReport& report);

}  // namespace symtk

#endif  // SYMTK_THEOREM_H_
