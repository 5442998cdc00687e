// Copyright 2026 The yfree Authors
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

// Text formats for graphs: graph6 (bit-exact), a plain edge list, and DOT.

#ifndef YFREE_GRAPH_IO_H_
#define YFREE_GRAPH_IO_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "yfree/graph.h"

namespace yfree {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        message_(what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

// Decodes one graph6 record. An optional ">>graph6<<" header and a single
// trailing newline are accepted.
Graph ParseGraph6(std::string_view text);
std::string EmitGraph6(const Graph& g);

// Every non-empty line of `text` decoded as graph6.
std::vector<Graph> ParseGraph6Lines(std::string_view text);

// "n m" followed by m lines "u v". Loops, duplicate edges, out-of-range
// vertices and a wrong edge count are all rejected.
Graph ParseEdgeList(std::string_view text);
std::string EmitEdgeList(const Graph& g);

std::string ToDot(const Graph& g, std::string_view name = "G");

}  // namespace yfree

#endif  // YFREE_GRAPH_IO_H_
