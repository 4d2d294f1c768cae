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

#ifndef SYMTK_GROUP_H_
#define SYMTK_GROUP_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "symtk/permutation.h"

namespace symtk {

// Orbit of a point under a generator list, with a Schreier transversal:
// Representative(x) maps root() to x.
class Orbit {
 public:
  Point root() const { return root_; }
  std::size_t size() const { return points_.size(); }
  // Points in breadth-first discovery order, root first.
  const std::vector<Point>& points() const { return points_; }
  bool Contains(Point x) const {
    return x < transversal_.size() && transversal_[x].has_value();
  }
  const Permutation& Representative(Point x) const { return *transversal_[x]; }

 private:
  friend Orbit ComputeOrbit(std::size_t degree,
                            std::span<const Permutation> generators,
                            Point point);

  Point root_ = 0;
  std::vector<Point> points_;
  std::vector<std::optional<Permutation>> transversal_;
};

// Throws kEmptyGenerators, kDegreeMismatch or kOutOfRange.
Orbit ComputeOrbit(std::span<const Permutation> generators, Point point);
// Same, but accepts an empty generator list (the orbit is then {point}).
Orbit ComputeOrbit(std::size_t degree, std::span<const Permutation> generators,
                   Point point);

// Base and strong generating set. Level i holds the fundamental orbit of
// base()[i] under the strong generators that fix base()[0..i-1] pointwise.
class Bsgs {
 public:
  std::size_t degree() const { return degree_; }
  const std::vector<Point>& base() const { return base_; }
  const std::vector<Permutation>& strong_generators() const {
    return strong_generators_;
  }
  const std::vector<Orbit>& transversals() const { return orbits_; }

  // Product of the fundamental orbit sizes. Throws kCapacityExceeded if the
  // order does not fit in 64 bits.
  std::uint64_t Order() const;

  // Membership by sifting. Throws kDegreeMismatch.
  bool Contains(const Permutation& p) const;

  // Sifts p starting at `level`. Returns the residue and the level at which
  // sifting stopped (base().size() when every level was passed).
  std::pair<Permutation, std::size_t> Strip(const Permutation& p,
                                            std::size_t level = 0) const;

 private:
  friend Bsgs SchreierSims(std::span<const Permutation> generators);

  std::size_t degree_ = 1;
  std::vector<Point> base_;
  std::vector<Permutation> strong_generators_;
  std::vector<Orbit> orbits_;
};

// Deterministic Schreier-Sims. Base points are chosen greedily: each new
// level takes the smallest point moved by a strong generator fixing the
// current base. Throws kEmptyGenerators; pass {Identity(n)} for the trivial
// group.
Bsgs SchreierSims(std::span<const Permutation> generators);

// Every element of the generated group, by breadth-first right
// multiplication. Ordered by word length, then lexicographically by images.
// Throws kCapacityExceeded once more than `cap` elements have been found.
std::vector<Permutation> Closure(std::span<const Permutation> generators,
                                 std::size_t cap);

}  // namespace symtk

#endif  // SYMTK_GROUP_H_
