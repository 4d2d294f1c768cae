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

#ifndef SYMTK_GRAPH_IO_H_
#define SYMTK_GRAPH_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symtk/graph.h"

namespace symtk {

// graph6, short form only: one byte n + 63, then the upper triangle in
// column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian six bits
// per byte, each byte + 63, zero padded.
inline constexpr std::size_t kGraph6MaxVertices = 62;

// Throws kUnsupported when g.n() > 62.
std::string Graph6Encode(const Graph& g);

// Strict: no header, no trailing newline. Throws kMalformedGraph6 for bad
// lengths, characters outside '?'..'~', or nonzero padding bits, and
// kUnsupported for the long-n form.
Graph Graph6Decode(std::string_view text);

struct Coordinate {
  double x = 0;
  double y = 0;
};
using Layout = std::vector<Coordinate>;

// Vertices 0..4 on a pentagon of radius 2, vertices 5..9 on a concentric
// pentagon of radius 1 (edges i -- i+2 of PetersenClassic() draw it as a
// pentagram). Vertex i and i + 5 sit at angle 90 + 72 i degrees.
Layout PetersenLayout();

// Undirected DOT. Nodes are named by 0-based id, carry their label when the
// graph has labels, and get pos="x,y!" when a layout is supplied. Throws
// kInvalidParameter when the layout size differs from g.n().
std::string ToDot(const Graph& g, const std::optional<Layout>& layout = {});

}  // namespace symtk

#endif  // SYMTK_GRAPH_IO_H_
