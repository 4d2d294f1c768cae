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

#ifndef SYMTK_PERMUTATION_H_
#define SYMTK_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace symtk {

// Points are 0-based internally. Cycle notation I/O is 1-based.
using Point = std::uint32_t;

// A bijection on {0, ..., n-1}, stored as its image array.
//
// Products read left to right: Compose(p, q) applies p first, then q, so
// Compose(p, q)(x) == q(p(x)). Every group routine in this library uses that
// convention.
class Permutation {
 public:
  // Identity on {0}. Exists so Permutation is regular; prefer Identity(n).
  Permutation() : images_{0} {}

  static Permutation Identity(std::size_t degree);

  // Throws kInvalidDegree for an empty image list and kOutOfRange if the
  // images are not a bijection.
  static Permutation FromImages(std::vector<Point> images);

  // Product of disjoint cycles over the 1-based points {1..degree}. Omitted
  // points are fixed. Throws kMalformedCycles on out-of-range or repeated
  // points.
  static Permutation FromCycles(
      std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool IsIdentity() const;
  Permutation Inverse() const;

  // Smallest point with p(x) != x, or degree() when p is the identity.
  Point SmallestMovedPoint() const;

  // 1-based disjoint cycle notation, e.g. "(1 2 3)(4 5)". Each cycle starts
  // at its smallest point, cycles sorted by that point, fixed points omitted,
  // "()" for the identity.
  std::string ToCycleString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // Lexicographic on the image arrays.
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

// r(x) = q(p(x)). Throws kDegreeMismatch when the degrees differ.
Permutation Compose(const Permutation& p, const Permutation& q);

// Parses the output of ToCycleString() (whitespace between tokens allowed).
// Throws kMalformedCycles.
Permutation ParseCycles(std::size_t degree, std::string_view text);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace symtk

#endif  // SYMTK_PERMUTATION_H_
