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

#ifndef SYMTK_GRAPH_H_
#define SYMTK_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symtk/permutation.h"

namespace symtk {

using Edge = std::pair<Point, Point>;

// Undirected simple graph on {0..n-1}. Each vertex owns a bitset row over
// all vertices; rows are kept symmetric and loop-free. Vertices may carry
// text labels, which must then be pairwise distinct.
class Graph {
 public:
  explicit Graph(std::size_t n = 0);

  // Throws kOutOfRange for endpoints >= n and kInvalidParameter for loops.
  static Graph FromEdges(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const { return n_; }

  bool HasEdge(Point u, Point v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  void AddEdge(Point u, Point v);
  void RemoveEdge(Point u, Point v);

  std::size_t Degree(Point v) const;
  std::vector<Point> Neighbors(Point v) const;
  // Adjacency row of v as 64-bit words, bit (w % 64) of word w / 64 is set
  // iff {v, w} is an edge.
  std::span<const std::uint64_t> Row(Point v) const {
    return std::span(rows_).subspan(v * words_, words_);
  }

  // Edges {u, v} with u < v, sorted.
  std::vector<Edge> Edges() const;

  const std::optional<std::vector<std::string>>& labels() const {
    return labels_;
  }
  // Throws kInvalidParameter unless there are exactly n distinct labels.
  void SetLabels(std::vector<std::string> labels);
  void ClearLabels() { labels_.reset(); }

  bool SameAdjacency(const Graph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }
  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void CheckVertex(Point v) const;

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
  std::optional<std::vector<std::string>> labels_;
};

// A k-subset of {1..ground}, members strictly increasing.
struct KSubset {
  int ground = 0;
  std::vector<Point> members;

  // "{1,2,3}"
  std::string ToString() const;
  friend bool operator==(const KSubset&, const KSubset&) = default;
};

// All k-subsets of {1..n} in lexicographic order. The list index is the
// vertex id used by every subset-model constructor.
// Throws kInvalidParameter unless n >= 1 and 0 <= k <= n.
std::vector<KSubset> Subsets(int n, int k);

// k-subsets of {1..n}, adjacent iff they share exactly t points.
// Throws kInvalidParameter unless 0 <= t < k <= n.
Graph JohnsonGeneral(int n, int k, int t);

// k-subsets of {1..n}, adjacent iff disjoint. Edgeless when 2k > n.
Graph Kneser(int n, int k);

// JohnsonGeneral(5, 3, 1): 3-subsets of {1..5} sharing exactly one point.
Graph PetersenSubsets();

// Outer 5-cycle 0..4, inner pentagram 5..9 (step 2), spokes {i, i+5}.
Graph PetersenClassic();

std::size_t EdgeCount(const Graph& g);
// Ascending.
std::vector<std::size_t> DegreeSequence(const Graph& g);
// The common degree, or nullopt.
std::optional<std::size_t> IsRegular(const Graph& g);
// Shortest cycle length; nullopt for forests.
std::optional<std::size_t> Girth(const Graph& g);
// Largest eccentricity; nullopt when disconnected or empty.
std::optional<std::size_t> Diameter(const Graph& g);
bool IsConnected(const Graph& g);
bool IsBipartite(const Graph& g);

// h has edge {s(u), s(v)} iff g has edge {u, v}; label of v moves to s(v).
// Throws kDegreeMismatch.
Graph PermuteGraph(const Graph& g, const Permutation& s);

// True iff PermuteGraph(g, s) has the same adjacency as g. Labels are not
// compared. Throws kDegreeMismatch.
bool IsAutomorphism(const Graph& g, const Permutation& s);

}  // namespace symtk

#endif  // SYMTK_GRAPH_H_
