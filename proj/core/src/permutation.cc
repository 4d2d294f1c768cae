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

#include "symtk/permutation.h"

#include <cctype>
#include <numeric>
#include <string>
#include <utility>

#include "symtk/error.h"

namespace symtk {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDegree:
      return "invalid degree";
    case ErrorKind::kDegreeMismatch:
      return "degree mismatch";
    case ErrorKind::kMalformedCycles:
      return "malformed cycles";
    case ErrorKind::kOutOfRange:
      return "out of range";
    case ErrorKind::kEmptyGenerators:
      return "empty generator list";
    case ErrorKind::kCapacityExceeded:
      return "capacity exceeded";
    case ErrorKind::kInvalidParameter:
      return "invalid parameter";
    case ErrorKind::kMalformedGraph6:
      return "malformed graph6";
    case ErrorKind::kUnsupported:
      return "unsupported";
    case ErrorKind::kInvalidPartition:
      return "invalid partition";
  }
  return "unknown error";
}

Permutation Permutation::Identity(std::size_t degree) {
  if (degree == 0) {
    throw Error(ErrorKind::kInvalidDegree, "degree must be at least 1");
  }
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::FromImages(std::vector<Point> images) {
  if (images.empty()) {
    throw Error(ErrorKind::kInvalidDegree, "degree must be at least 1");
  }
  std::vector<bool> seen(images.size(), false);
  for (Point y : images) {
    if (y >= images.size() || seen[y]) {
      throw Error(ErrorKind::kOutOfRange, "image array is not a bijection");
    }
    seen[y] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::FromCycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation result = Identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point a = cycle[i];
      if (a < 1 || a > degree) {
        throw Error(ErrorKind::kMalformedCycles,
                    "point " + std::to_string(a) + " outside 1.." +
                        std::to_string(degree));
      }
      if (used[a - 1]) {
        throw Error(ErrorKind::kMalformedCycles,
                    "point " + std::to_string(a) + " repeated");
      }
      used[a - 1] = true;
      const Point b = cycle[(i + 1) % cycle.size()];
      result.images_[a - 1] = b - 1;
    }
  }
  return result;
}

bool Permutation::IsIdentity() const {
  for (Point x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

Permutation Permutation::Inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  return Permutation(std::move(inv));
}

Point Permutation::SmallestMovedPoint() const {
  for (Point x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return x;
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::ToCycleString() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    Point x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      first = false;
      out += std::to_string(x + 1);
      done[x] = true;
      x = images_[x];
    } while (x != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation Compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw Error(ErrorKind::kDegreeMismatch,
                "cannot compose degree " + std::to_string(p.degree()) +
                    " with degree " + std::to_string(q.degree()));
  }
  std::vector<Point> images(p.degree());
  for (Point x = 0; x < images.size(); ++x) images[x] = q[p[x]];
  return Permutation::FromImages(std::move(images));
}

Permutation ParseCycles(std::size_t degree, std::string_view text) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip_space();
  if (i == text.size()) {
    throw Error(ErrorKind::kMalformedCycles, "empty cycle notation");
  }
  while (i < text.size()) {
    if (text[i] != '(') {
      throw Error(ErrorKind::kMalformedCycles,
                  "expected '(' at offset " + std::to_string(i));
    }
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i == text.size()) {
        throw Error(ErrorKind::kMalformedCycles, "unterminated cycle");
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw Error(ErrorKind::kMalformedCycles,
                    std::string("unexpected character '") + text[i] + "'");
      }
      std::uint64_t value = 0;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree) {
          throw Error(ErrorKind::kMalformedCycles,
                      "point exceeds degree " + std::to_string(degree));
        }
        ++i;
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::FromCycles(degree, cycles);
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
  std::size_t h = p.degree();
  for (Point y : p.images()) {
    h ^= std::hash<Point>{}(y) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace symtk
