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

#include "symtk/partition.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "symtk/error.h"

namespace symtk {

OrderedPartition OrderedPartition::Unit(std::size_t n) {
  OrderedPartition p;
  p.n_ = n;
  if (n > 0) {
    p.cells_.emplace_back(n);
    std::iota(p.cells_[0].begin(), p.cells_[0].end(), Point{0});
  }
  return p;
}

OrderedPartition OrderedPartition::Discrete(std::size_t n) {
  OrderedPartition p;
  p.n_ = n;
  for (Point v = 0; v < n; ++v) p.cells_.push_back({v});
  return p;
}

OrderedPartition OrderedPartition::FromCells(
    std::size_t n, std::vector<std::vector<Point>> cells) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (const auto& cell : cells) {
    if (cell.empty()) {
      throw Error(ErrorKind::kInvalidPartition, "empty cell");
    }
    for (Point v : cell) {
      if (v >= n || seen[v]) {
        throw Error(ErrorKind::kInvalidPartition,
                    "vertex " + std::to_string(v) +
                        " out of range or in two cells");
      }
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n) {
    throw Error(ErrorKind::kInvalidPartition,
                "cells cover " + std::to_string(covered) + " of " +
                    std::to_string(n) + " vertices");
  }
  OrderedPartition p;
  p.n_ = n;
  p.cells_ = std::move(cells);
  return p;
}

OrderedPartition OrderedPartition::Individualize(std::size_t index,
                                                 Point v) const {
  OrderedPartition out;
  out.n_ = n_;
  out.cells_.reserve(cells_.size() + 1);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i != index) {
      out.cells_.push_back(cells_[i]);
      continue;
    }
    std::vector<Point> rest;
    for (Point w : cells_[i]) {
      if (w != v) rest.push_back(w);
    }
    if (rest.size() == cells_[i].size()) {
      throw Error(ErrorKind::kInvalidPartition,
                  "vertex " + std::to_string(v) + " not in cell " +
                      std::to_string(index));
    }
    out.cells_.push_back({v});
    if (!rest.empty()) out.cells_.push_back(std::move(rest));
  }
  return out;
}

std::string OrderedPartition::DebugString() const {
  std::string out;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i > 0) out += " | ";
    for (std::size_t j = 0; j < cells_[i].size(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(cells_[i][j]);
    }
  }
  return out;
}

OrderedPartition Refine(const Graph& g, const OrderedPartition& p) {
  if (p.n() != g.n()) {
    throw Error(ErrorKind::kInvalidPartition,
                "partition of " + std::to_string(p.n()) +
                    " vertices for a graph with " + std::to_string(g.n()));
  }
  const std::size_t words = (g.n() + 63) / 64;
  std::vector<std::vector<Point>> cells = p.cells();
  std::vector<std::uint64_t> mask(words);
  std::vector<std::size_t> count(g.n());

  std::size_t splitter = 0;
  while (splitter < cells.size()) {
    std::fill(mask.begin(), mask.end(), 0);
    for (Point v : cells[splitter]) {
      mask[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    for (Point v = 0; v < g.n(); ++v) {
      const auto row = g.Row(v);
      std::size_t c = 0;
      for (std::size_t w = 0; w < words; ++w) c += std::popcount(row[w] & mask[w]);
      count[v] = c;
    }

    std::vector<std::vector<Point>> next;
    next.reserve(cells.size());
    bool split = false;
    for (auto& cell : cells) {
      std::stable_sort(cell.begin(), cell.end(), [&](Point a, Point b) {
        return count[a] > count[b];
      });
      std::size_t start = 0;
      for (std::size_t i = 1; i <= cell.size(); ++i) {
        if (i == cell.size() || count[cell[i]] != count[cell[start]]) {
          next.emplace_back(cell.begin() + start, cell.begin() + i);
          start = i;
        }
      }
      split = split || next.back().size() != cell.size();
    }
    if (split) {
      cells = std::move(next);
      splitter = 0;
    } else {
      ++splitter;
    }
  }
  return OrderedPartition::FromCells(g.n(), std::move(cells));
}

}  // namespace symtk
