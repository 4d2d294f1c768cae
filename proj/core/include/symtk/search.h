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

#ifndef SYMTK_SEARCH_H_
#define SYMTK_SEARCH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symtk/graph.h"
#include "symtk/permutation.h"

namespace symtk {

// Canonical labelling of a graph. relabeling sends input vertex v to
// canonical position relabeling[v]; certificate is the upper triangle of the
// relabelled adjacency matrix in graph6 bit order x(0,1), x(0,2), x(1,2), ...
struct CanonicalForm {
  std::size_t n = 0;
  Permutation relabeling;
  std::vector<bool> certificate;

  // "n=<n>:" followed by the certificate as lowercase hex, four bits per
  // digit, most significant bit first, zero padded at the end.
  std::string ToString() const;
};

struct SearchOptions {
  // Skip children of a search node that lie in one orbit, under the
  // automorphisms found so far that fix the node's individualized vertices,
  // with an already explored child. Output is identical either way; the
  // test suite checks this against the unpruned search.
  bool orbit_pruning = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

struct SearchResult {
  // Deterministic, none redundant with the ones before it.
  std::vector<Permutation> generators;
  CanonicalForm canonical;
  SearchStats stats;
};

// Individualization-refinement search over the equitable partitions of g.
// The target cell at each node is the first smallest non-singleton cell,
// and children are tried in increasing vertex order. The canonical leaf is
// the one with the lexicographically smallest certificate; two leaves with
// equal certificates yield an automorphism. Throws kInvalidDegree when
// g.n() == 0.
SearchResult SearchAutomorphisms(const Graph& g,
                                 const SearchOptions& options = {});

// Generators of Aut(g).
std::vector<Permutation> AutomorphismGroup(const Graph& g,
                                           const SearchOptions& options = {});

CanonicalForm ComputeCanonicalForm(const Graph& g,
                                   const SearchOptions& options = {});

// An isomorphism s with PermuteGraph(a, s) having b's adjacency, or nullopt.
// The mapping is verified before it is returned.
std::optional<Permutation> AreIsomorphic(const Graph& a, const Graph& b);

inline constexpr std::size_t kBruteForceMaxVertices = 10;

struct BruteForceScan {
  std::vector<Permutation> automorphisms;  // lexicographic order
  std::uint64_t permutations_scanned = 0;
};

// Tests every one of the n! vertex permutations. The outer loop over the
// image of vertex 0 is split across `threads` workers; the result does not
// depend on the thread count. Throws kCapacityExceeded for n > 10 and
// kInvalidDegree for n == 0.
BruteForceScan ScanAllPermutations(const Graph& g, unsigned threads = 1);

std::vector<Permutation> BruteForceAutomorphisms(const Graph& g,
                                                 unsigned threads = 1);

}  // namespace symtk

#endif  // SYMTK_SEARCH_H_
