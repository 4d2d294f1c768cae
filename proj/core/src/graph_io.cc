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

#include "symtk/graph_io.h"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "symtk/error.h"

namespace symtk {

std::string Graph6Encode(const Graph& g) {
  const std::size_t n = g.n();
  if (n > kGraph6MaxVertices) {
    throw Error(ErrorKind::kUnsupported,
                "graph6 short form holds at most 62 vertices, got " +
                    std::to_string(n));
  }
  std::string out(1, static_cast<char>(n + 63));
  int value = 0;
  int filled = 0;
  for (Point j = 1; j < n; ++j) {
    for (Point i = 0; i < j; ++i) {
      value = (value << 1) | (g.HasEdge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(value + 63);
        value = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((value << (6 - filled)) + 63);
  return out;
}

Graph Graph6Decode(std::string_view text) {
  if (text.empty()) {
    throw Error(ErrorKind::kMalformedGraph6, "empty input");
  }
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw Error(ErrorKind::kMalformedGraph6,
                  "character code " +
                      std::to_string(static_cast<unsigned char>(c)) +
                      " outside 63..126");
    }
  }
  if (text[0] == 126) {
    throw Error(ErrorKind::kUnsupported, "graph6 long form (n > 62)");
  }
  const std::size_t n = static_cast<std::size_t>(text[0] - 63);
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected) {
    throw Error(ErrorKind::kMalformedGraph6,
                "expected " + std::to_string(expected) + " bytes for n=" +
                    std::to_string(n) + ", got " + std::to_string(text.size()));
  }
  Graph g(n);
  std::size_t k = 0;
  auto bit = [&](std::size_t index) {
    const int byte = text[1 + index / 6] - 63;
    return (byte >> (5 - index % 6)) & 1;
  };
  for (Point j = 1; j < n; ++j) {
    for (Point i = 0; i < j; ++i) {
      if (bit(k++)) g.AddEdge(i, j);
    }
  }
  for (; k < (expected - 1) * 6; ++k) {
    if (bit(k)) {
      throw Error(ErrorKind::kMalformedGraph6, "nonzero padding bits");
    }
  }
  return g;
}

Layout PetersenLayout() {
  Layout layout(10);
  for (int i = 0; i < 5; ++i) {
    const double angle = std::numbers::pi / 2 + i * 2 * std::numbers::pi / 5;
    layout[i] = {2 * std::cos(angle), 2 * std::sin(angle)};
    layout[i + 5] = {std::cos(angle), std::sin(angle)};
  }
  return layout;
}

namespace {

std::string FormatCoordinate(double v) {
  // Round first so that -0.00001 prints as 0.
  double rounded = std::round(v * 1e4) / 1e4;
  if (rounded == 0) rounded = 0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", rounded);
  return buf;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string ToDot(const Graph& g, const std::optional<Layout>& layout) {
  if (layout && layout->size() != g.n()) {
    throw Error(ErrorKind::kInvalidParameter,
                "layout has " + std::to_string(layout->size()) +
                    " coordinates for " + std::to_string(g.n()) + " vertices");
  }
  std::string out = "graph G {\n";
  for (Point v = 0; v < g.n(); ++v) {
    std::string attrs;
    if (g.labels()) attrs += "label=\"" + Escape((*g.labels())[v]) + "\"";
    if (layout) {
      if (!attrs.empty()) attrs += ", ";
      attrs += "pos=\"" + FormatCoordinate((*layout)[v].x) + "," +
               FormatCoordinate((*layout)[v].y) + "!\"";
    }
    out += "  " + std::to_string(v);
    if (!attrs.empty()) out += " [" + attrs + "]";
    out += ";\n";
  }
  for (const auto& [u, v] : g.Edges()) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace symtk
