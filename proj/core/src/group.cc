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

#include "symtk/group.h"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "symtk/error.h"

namespace symtk {
namespace {

std::size_t CheckedDegree(std::span<const Permutation> generators) {
  if (generators.empty()) {
    throw Error(ErrorKind::kEmptyGenerators, "at least one generator needed");
  }
  const std::size_t degree = generators.front().degree();
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorKind::kDegreeMismatch,
                  "generators of degree " + std::to_string(degree) + " and " +
                      std::to_string(g.degree()));
    }
  }
  return degree;
}

bool FixesAll(const Permutation& p, std::span<const Point> points) {
  return std::all_of(points.begin(), points.end(),
                     [&](Point b) { return p[b] == b; });
}

std::vector<Permutation> LevelGenerators(const std::vector<Permutation>& gens,
                                         std::span<const Point> prefix) {
  std::vector<Permutation> out;
  for (const Permutation& g : gens) {
    if (FixesAll(g, prefix)) out.push_back(g);
  }
  return out;
}

}  // namespace

Orbit ComputeOrbit(std::span<const Permutation> generators, Point point) {
  return ComputeOrbit(CheckedDegree(generators), generators, point);
}

Orbit ComputeOrbit(std::size_t degree, std::span<const Permutation> generators,
                   Point point) {
  if (point >= degree) {
    throw Error(ErrorKind::kOutOfRange,
                "point " + std::to_string(point) + " not below degree " +
                    std::to_string(degree));
  }
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      throw Error(ErrorKind::kDegreeMismatch, "generator degree differs");
    }
  }
  Orbit orbit;
  orbit.root_ = point;
  orbit.transversal_.assign(degree, std::nullopt);
  orbit.transversal_[point] = Permutation::Identity(degree);
  orbit.points_.push_back(point);
  for (std::size_t head = 0; head < orbit.points_.size(); ++head) {
    const Point x = orbit.points_[head];
    for (const Permutation& g : generators) {
      const Point y = g[x];
      if (orbit.transversal_[y]) continue;
      orbit.transversal_[y] = Compose(*orbit.transversal_[x], g);
      orbit.points_.push_back(y);
    }
  }
  return orbit;
}

std::uint64_t Bsgs::Order() const {
  std::uint64_t order = 1;
  for (const Orbit& orbit : orbits_) {
    if (__builtin_mul_overflow(order, orbit.size(), &order)) {
      throw Error(ErrorKind::kCapacityExceeded,
                  "group order does not fit in 64 bits");
    }
  }
  return order;
}

std::pair<Permutation, std::size_t> Bsgs::Strip(const Permutation& p,
                                                std::size_t level) const {
  if (p.degree() != degree_) {
    throw Error(ErrorKind::kDegreeMismatch,
                "permutation of degree " + std::to_string(p.degree()) +
                    " against group of degree " + std::to_string(degree_));
  }
  Permutation residue = p;
  for (; level < base_.size(); ++level) {
    const Point image = residue[base_[level]];
    if (!orbits_[level].Contains(image)) return {residue, level};
    residue = Compose(residue, orbits_[level].Representative(image).Inverse());
  }
  return {residue, base_.size()};
}

bool Bsgs::Contains(const Permutation& p) const {
  auto [residue, level] = Strip(p);
  return level == base_.size() && residue.IsIdentity();
}

Bsgs SchreierSims(std::span<const Permutation> generators) {
  Bsgs bsgs;
  bsgs.degree_ = CheckedDegree(generators);

  std::vector<Permutation>& strong = bsgs.strong_generators_;
  for (const Permutation& g : generators) {
    if (!g.IsIdentity() &&
        std::find(strong.begin(), strong.end(), g) == strong.end()) {
      strong.push_back(g);
    }
  }

  std::vector<Point>& base = bsgs.base_;
  for (;;) {
    Point next = static_cast<Point>(bsgs.degree_);
    for (const Permutation& s : strong) {
      if (FixesAll(s, base)) next = std::min(next, s.SmallestMovedPoint());
    }
    if (next == bsgs.degree_) break;
    base.push_back(next);
  }

  auto rebuild_level = [&](std::size_t level) {
    const auto gens =
        LevelGenerators(strong, std::span(base).first(level));
    bsgs.orbits_[level] = ComputeOrbit(bsgs.degree_, gens, base[level]);
  };
  bsgs.orbits_.resize(base.size());
  for (std::size_t level = 0; level < base.size(); ++level) {
    rebuild_level(level);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(base.size()) - 1;
  while (i >= 0) {
    const auto level = static_cast<std::size_t>(i);
    const auto gens = LevelGenerators(strong, std::span(base).first(level));
    const Orbit& orbit = bsgs.orbits_[level];
    bool extended = false;
    for (Point x : orbit.points()) {
      for (const Permutation& s : gens) {
        // u_x * s * u_{s(x)}^-1 fixes base[level].
        const Permutation schreier =
            Compose(Compose(orbit.Representative(x), s),
                    orbit.Representative(s[x]).Inverse());
        auto [residue, stop] = bsgs.Strip(schreier, level + 1);
        if (stop == base.size() && residue.IsIdentity()) continue;
        strong.push_back(residue);
        if (stop == base.size()) {
          base.push_back(residue.SmallestMovedPoint());
          bsgs.orbits_.emplace_back();
        }
        for (std::size_t l = level + 1; l <= stop; ++l) rebuild_level(l);
        i = static_cast<std::ptrdiff_t>(stop);
        extended = true;
        break;
      }
      if (extended) break;
    }
    if (!extended) --i;
  }
  return bsgs;
}

std::vector<Permutation> Closure(std::span<const Permutation> generators,
                                 std::size_t cap) {
  const std::size_t degree = CheckedDegree(generators);
  if (cap == 0) {
    throw Error(ErrorKind::kInvalidParameter, "cap must be positive");
  }
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements;
  std::vector<Permutation> frontier{Permutation::Identity(degree)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& x : frontier) {
      for (const Permutation& g : generators) {
        Permutation y = Compose(x, g);
        if (!seen.insert(y).second) continue;
        if (seen.size() > cap) {
          throw Error(ErrorKind::kCapacityExceeded,
                      "group has more than " + std::to_string(cap) +
                          " elements");
        }
        next.push_back(std::move(y));
      }
    }
    std::sort(next.begin(), next.end());
    elements.insert(elements.end(), frontier.begin(), frontier.end());
    frontier = std::move(next);
  }
  return elements;
}

}  // namespace symtk
