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

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <set>

#include "symtk/error.h"

namespace symtk {

Graph::Graph(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

Graph Graph::FromEdges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.AddEdge(u, v);
  return g;
}

void Graph::CheckVertex(Point v) const {
  if (v >= n_) {
    throw Error(ErrorKind::kOutOfRange, "vertex " + std::to_string(v) +
                                            " not below " + std::to_string(n_));
  }
}

void Graph::AddEdge(Point u, Point v) {
  CheckVertex(u);
  CheckVertex(v);
  if (u == v) {
    throw Error(ErrorKind::kInvalidParameter,
                "loop at vertex " + std::to_string(u));
  }
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

void Graph::RemoveEdge(Point u, Point v) {
  CheckVertex(u);
  CheckVertex(v);
  rows_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
  rows_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
}

std::size_t Graph::Degree(Point v) const {
  std::size_t d = 0;
  for (std::uint64_t w : Row(v)) d += std::popcount(w);
  return d;
}

std::vector<Point> Graph::Neighbors(Point v) const {
  std::vector<Point> out;
  const auto row = Row(v);
  for (std::size_t i = 0; i < row.size(); ++i) {
    for (std::uint64_t w = row[i]; w != 0; w &= w - 1) {
      out.push_back(static_cast<Point>(i * 64 + std::countr_zero(w)));
    }
  }
  return out;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  for (Point u = 0; u < n_; ++u) {
    for (Point v : Neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::SetLabels(std::vector<std::string> labels) {
  if (labels.size() != n_) {
    throw Error(ErrorKind::kInvalidParameter,
                "expected " + std::to_string(n_) + " labels, got " +
                    std::to_string(labels.size()));
  }
  std::set<std::string> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size()) {
    throw Error(ErrorKind::kInvalidParameter, "labels must be distinct");
  }
  labels_ = std::move(labels);
}

std::string KSubset::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(members[i]);
  }
  return out + "}";
}

std::vector<KSubset> Subsets(int n, int k) {
  if (n < 1 || k < 0 || k > n) {
    throw Error(ErrorKind::kInvalidParameter,
                "subsets need n >= 1 and 0 <= k <= n (n=" + std::to_string(n) +
                    ", k=" + std::to_string(k) + ")");
  }
  std::vector<KSubset> out;
  std::vector<Point> current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[i] = static_cast<Point>(i + 1);
  for (;;) {
    out.push_back(KSubset{n, current});
    // Advance to the lexicographic successor.
    int i = k - 1;
    while (i >= 0 && current[i] == static_cast<Point>(n - k + i + 1)) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

namespace {

std::size_t IntersectionSize(const KSubset& a, const KSubset& b) {
  std::size_t count = 0;
  auto i = a.members.begin();
  auto j = b.members.begin();
  while (i != a.members.end() && j != b.members.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

Graph SubsetGraph(int n, int k, std::size_t shared) {
  const auto subsets = Subsets(n, k);
  Graph g(subsets.size());
  for (Point u = 0; u < subsets.size(); ++u) {
    for (Point v = u + 1; v < subsets.size(); ++v) {
      if (IntersectionSize(subsets[u], subsets[v]) == shared) g.AddEdge(u, v);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(subsets.size());
  for (const KSubset& s : subsets) labels.push_back(s.ToString());
  g.SetLabels(std::move(labels));
  return g;
}

}  // namespace

Graph JohnsonGeneral(int n, int k, int t) {
  if (!(0 <= t && t < k && k <= n)) {
    throw Error(ErrorKind::kInvalidParameter,
                "johnson graph needs 0 <= t < k <= n (n=" + std::to_string(n) +
                    ", k=" + std::to_string(k) + ", t=" + std::to_string(t) +
                    ")");
  }
  return SubsetGraph(n, k, static_cast<std::size_t>(t));
}

Graph Kneser(int n, int k) { return SubsetGraph(n, k, 0); }

Graph PetersenSubsets() { return JohnsonGeneral(5, 3, 1); }

Graph PetersenClassic() {
  Graph g(10);
  for (Point i = 0; i < 5; ++i) {
    g.AddEdge(i, (i + 1) % 5);
    g.AddEdge(i, i + 5);
    g.AddEdge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

std::size_t EdgeCount(const Graph& g) {
  std::size_t twice = 0;
  for (Point v = 0; v < g.n(); ++v) twice += g.Degree(v);
  return twice / 2;
}

std::vector<std::size_t> DegreeSequence(const Graph& g) {
  std::vector<std::size_t> out;
  out.reserve(g.n());
  for (Point v = 0; v < g.n(); ++v) out.push_back(g.Degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> IsRegular(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  const std::size_t d = g.Degree(0);
  for (Point v = 1; v < g.n(); ++v) {
    if (g.Degree(v) != d) return std::nullopt;
  }
  return d;
}

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> BfsDistances(const Graph& g, Point root) {
  std::vector<std::size_t> dist(g.n(), kUnreached);
  std::deque<Point> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    const Point u = queue.front();
    queue.pop_front();
    for (Point w : g.Neighbors(u)) {
      if (dist[w] != kUnreached) continue;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

}  // namespace

std::optional<std::size_t> Girth(const Graph& g) {
  std::size_t best = kUnreached;
  for (Point root = 0; root < g.n(); ++root) {
    std::vector<std::size_t> dist(g.n(), kUnreached);
    std::vector<Point> parent(g.n(), root);
    std::deque<Point> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const Point u = queue.front();
      queue.pop_front();
      for (Point w : g.Neighbors(u)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnreached) return std::nullopt;
  return best;
}

std::optional<std::size_t> Diameter(const Graph& g) {
  if (g.n() == 0) return std::nullopt;
  std::size_t diameter = 0;
  for (Point root = 0; root < g.n(); ++root) {
    for (std::size_t d : BfsDistances(g, root)) {
      if (d == kUnreached) return std::nullopt;
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

bool IsConnected(const Graph& g) {
  if (g.n() == 0) return true;
  const auto dist = BfsDistances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == kUnreached; });
}

bool IsBipartite(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  for (Point start = 0; start < g.n(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::deque<Point> queue{start};
    while (!queue.empty()) {
      const Point u = queue.front();
      queue.pop_front();
      for (Point w : g.Neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

void CheckPermutationDegree(const Graph& g, const Permutation& s) {
  if (s.degree() != g.n()) {
    throw Error(ErrorKind::kDegreeMismatch,
                "permutation of degree " + std::to_string(s.degree()) +
                    " on a graph with " + std::to_string(g.n()) + " vertices");
  }
}

}  // namespace

Graph PermuteGraph(const Graph& g, const Permutation& s) {
  CheckPermutationDegree(g, s);
  Graph h(g.n());
  for (const auto& [u, v] : g.Edges()) h.AddEdge(s[u], s[v]);
  if (g.labels()) {
    std::vector<std::string> moved(g.n());
    for (Point v = 0; v < g.n(); ++v) moved[s[v]] = (*g.labels())[v];
    h.SetLabels(std::move(moved));
  }
  return h;
}

bool IsAutomorphism(const Graph& g, const Permutation& s) {
  CheckPermutationDegree(g, s);
  // s is a bijection, so mapping every edge onto an edge is enough.
  for (Point u = 0; u < g.n(); ++u) {
    for (Point v : g.Neighbors(u)) {
      if (u < v && !g.HasEdge(s[u], s[v])) return false;
    }
  }
  return true;
}

}  // namespace symtk
