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

#include "symtk/search.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "symtk/error.h"
#include "symtk/group.h"
#include "symtk/partition.h"

namespace symtk {

std::string CanonicalForm::ToString() const {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out = "n=" + std::to_string(n) + ":";
  for (std::size_t i = 0; i < certificate.size(); i += 4) {
    int digit = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      digit <<= 1;
      if (i + j < certificate.size() && certificate[i + j]) digit |= 1;
    }
    out += kHex[digit];
  }
  return out;
}

namespace {

struct Leaf {
  Permutation labeling;
  std::vector<bool> certificate;
};

class Searcher {
 public:
  Searcher(const Graph& g, const SearchOptions& options)
      : graph_(g), options_(options) {}

  SearchResult Run() {
    Visit(Refine(graph_, OrderedPartition::Unit(graph_.n())));
    SearchResult result;
    result.generators = std::move(generators_);
    result.canonical.n = graph_.n();
    result.canonical.relabeling = best_->labeling;
    result.canonical.certificate = best_->certificate;
    result.stats = stats_;
    return result;
  }

 private:
  void Visit(const OrderedPartition& p) {
    ++stats_.nodes;
    if (p.IsDiscrete()) {
      VisitLeaf(p);
      return;
    }
    std::size_t target = p.size();
    for (std::size_t i = 0; i < p.size(); ++i) {
      const std::size_t size = p.cells()[i].size();
      if (size > 1 && (target == p.size() || size < p.cells()[target].size())) {
        target = i;
      }
    }
    std::vector<Point> children = p.cells()[target];
    std::sort(children.begin(), children.end());
    std::vector<Point> explored;
    for (Point v : children) {
      if (options_.orbit_pruning && SharesOrbit(v, explored)) continue;
      explored.push_back(v);
      prefix_.push_back(v);
      Visit(Refine(graph_, p.Individualize(target, v)));
      prefix_.pop_back();
    }
  }

  // True if v is in the orbit of some explored sibling under the known
  // generators that fix every individualized vertex on the current path.
  bool SharesOrbit(Point v, const std::vector<Point>& explored) const {
    if (explored.empty()) return false;
    std::vector<const Permutation*> stabilizing;
    for (const Permutation& gen : generators_) {
      if (std::all_of(prefix_.begin(), prefix_.end(),
                      [&](Point b) { return gen[b] == b; })) {
        stabilizing.push_back(&gen);
      }
    }
    if (stabilizing.empty()) return false;
    std::vector<bool> seen(graph_.n(), false);
    std::vector<Point> queue{v};
    seen[v] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const Permutation* gen : stabilizing) {
        const Point y = (*gen)[queue[head]];
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return std::any_of(explored.begin(), explored.end(),
                       [&](Point w) { return seen[w]; });
  }

  void VisitLeaf(const OrderedPartition& p) {
    ++stats_.leaves;
    const std::size_t n = graph_.n();
    std::vector<Point> position(n);
    for (std::size_t i = 0; i < n; ++i) {
      position[p.cells()[i][0]] = static_cast<Point>(i);
    }
    Leaf leaf{Permutation::FromImages(std::move(position)), {}};
    leaf.certificate.reserve(n * (n - 1) / 2);
    const Permutation to_vertex = leaf.labeling.Inverse();
    for (Point j = 1; j < n; ++j) {
      for (Point i = 0; i < j; ++i) {
        leaf.certificate.push_back(graph_.HasEdge(to_vertex[i], to_vertex[j]));
      }
    }

    if (!first_) {
      first_ = leaf;
      best_ = std::move(leaf);
      return;
    }
    // Equal certificates: vertex first[v] -> leaf[v] position-wise is an
    // automorphism.
    if (leaf.certificate == first_->certificate) {
      AddAutomorphism(Compose(first_->labeling, to_vertex));
    } else if (leaf.certificate == best_->certificate) {
      AddAutomorphism(Compose(best_->labeling, to_vertex));
    }
    if (leaf.certificate < best_->certificate) best_ = std::move(leaf);
  }

  void AddAutomorphism(const Permutation& a) {
    if (a.IsIdentity()) return;
    if (group_ && group_->Contains(a)) return;
    generators_.push_back(a);
    group_ = SchreierSims(generators_);
  }

  const Graph& graph_;
  SearchOptions options_;
  std::vector<Point> prefix_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<Permutation> generators_;
  std::optional<Bsgs> group_;
  SearchStats stats_;
};

}  // namespace

SearchResult SearchAutomorphisms(const Graph& g, const SearchOptions& options) {
  if (g.n() == 0) {
    throw Error(ErrorKind::kInvalidDegree, "graph has no vertices");
  }
  return Searcher(g, options).Run();
}

std::vector<Permutation> AutomorphismGroup(const Graph& g,
                                           const SearchOptions& options) {
  return SearchAutomorphisms(g, options).generators;
}

CanonicalForm ComputeCanonicalForm(const Graph& g,
                                   const SearchOptions& options) {
  return SearchAutomorphisms(g, options).canonical;
}

std::optional<Permutation> AreIsomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || EdgeCount(a) != EdgeCount(b)) return std::nullopt;
  const CanonicalForm ca = ComputeCanonicalForm(a);
  const CanonicalForm cb = ComputeCanonicalForm(b);
  if (ca.certificate != cb.certificate) return std::nullopt;
  Permutation mapping = Compose(ca.relabeling, cb.relabeling.Inverse());
  if (!PermuteGraph(a, mapping).SameAdjacency(b)) {
    throw std::logic_error("certificate match without an isomorphism");
  }
  return mapping;
}

namespace {

struct Block {
  std::vector<Permutation> found;
  std::uint64_t scanned = 0;
};

// All permutations with images[0] == first_image, in lexicographic order.
Block ScanBlock(const Graph& g, const std::vector<Edge>& edges,
                Point first_image) {
  const std::size_t n = g.n();
  std::vector<Point> images;
  images.reserve(n);
  images.push_back(first_image);
  for (Point v = 0; v < n; ++v) {
    if (v != first_image) images.push_back(v);
  }
  Block block;
  do {
    ++block.scanned;
    const bool preserves = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
      return g.HasEdge(images[e.first], images[e.second]);
    });
    if (preserves) block.found.push_back(Permutation::FromImages(images));
  } while (std::next_permutation(images.begin() + 1, images.end()));
  return block;
}

}  // namespace

BruteForceScan ScanAllPermutations(const Graph& g, unsigned threads) {
  const std::size_t n = g.n();
  if (n == 0) {
    throw Error(ErrorKind::kInvalidDegree, "graph has no vertices");
  }
  if (n > kBruteForceMaxVertices) {
    throw Error(ErrorKind::kCapacityExceeded,
                "brute force is limited to 10 vertices, got " +
                    std::to_string(n));
  }
  const std::vector<Edge> edges = g.Edges();
  std::vector<Block> blocks(n);
  const unsigned workers =
      std::clamp<unsigned>(threads, 1, static_cast<unsigned>(n));
  if (workers == 1) {
    for (Point f = 0; f < n; ++f) blocks[f] = ScanBlock(g, edges, f);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (Point f = w; f < n; f += workers) {
          blocks[f] = ScanBlock(g, edges, f);
        }
      });
    }
  }
  BruteForceScan scan;
  for (auto& block : blocks) {
    scan.permutations_scanned += block.scanned;
    scan.automorphisms.insert(scan.automorphisms.end(),
                              std::make_move_iterator(block.found.begin()),
                              std::make_move_iterator(block.found.end()));
  }
  return scan;
}

std::vector<Permutation> BruteForceAutomorphisms(const Graph& g,
                                                 unsigned threads) {
  return ScanAllPermutations(g, threads).automorphisms;
}

}  // namespace symtk
