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

#ifndef SYMTK_PARTITION_H_
#define SYMTK_PARTITION_H_

#include <cstddef>
#include <string>
#include <vector>

#include "symtk/graph.h"

namespace symtk {

// Ordered list of disjoint nonempty cells covering {0..n-1}. Used as a vertex
// coloring: the cell index is the color.
class OrderedPartition {
 public:
  // Single cell {0..n-1}.
  static OrderedPartition Unit(std::size_t n);
  // Cells {0}, {1}, ..., {n-1}.
  static OrderedPartition Discrete(std::size_t n);
  // Throws kInvalidPartition unless the cells are nonempty, disjoint and
  // cover {0..n-1}.
  static OrderedPartition FromCells(std::size_t n,
                                    std::vector<std::vector<Point>> cells);

  std::size_t n() const { return n_; }
  const std::vector<std::vector<Point>>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool IsDiscrete() const { return cells_.size() == n_; }

  // Splits cell `index` into {v} followed by the remaining vertices.
  OrderedPartition Individualize(std::size_t index, Point v) const;

  // e.g. "0 4 | 1 3 | 2"
  std::string DebugString() const;

  friend bool operator==(const OrderedPartition&,
                         const OrderedPartition&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Point>> cells_;
};

// Coarsest equitable refinement of p: afterwards every two vertices in one
// cell have the same number of neighbours in each cell. A cell that splits is
// replaced in place by its fragments, ordered by neighbour count into the
// splitting cell, largest count first; vertices keep their relative order
// inside a fragment. Throws kInvalidPartition when p.n() != g.n().
OrderedPartition Refine(const Graph& g, const OrderedPartition& p);

}  // namespace symtk

#endif  // SYMTK_PARTITION_H_
