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

#include "yfree/graph_io.h"

#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>

namespace yfree {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;
constexpr std::uint64_t kMaxOrder = 68719476735ULL;  // 2^36 - 1

// Value of the 6-bit group at `pos`, or a ParseError for bytes outside
// the printable range '?'..'~'.
int Sextet(std::string_view text, std::size_t pos, std::size_t base) {
  const unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kBias + 63) {
    throw ParseError("graph6: byte outside '?'..'~'", base + pos);
  }
  return c - kBias;
}

void AppendOrder(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  int groups = 3;
  if (n <= 258047) {
    out.push_back('~');
  } else {
    out.append("~~");
    groups = 6;
  }
  for (int i = groups - 1; i >= 0; --i) {
    out.push_back(static_cast<char>(((n >> (6 * i)) & 63) + kBias));
  }
}

}  // namespace

Graph ParseGraph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input", base);

  std::uint64_t n = 0;
  std::size_t pos = 0;
  const int first = Sextet(text, 0, base);
  if (first < 63) {
    n = first;
    pos = 1;
  } else {
    int groups = 3;
    pos = 1;
    if (text.size() > 1 && Sextet(text, 1, base) == 63) {
      groups = 6;
      pos = 2;
    }
    if (text.size() < pos + groups) {
      throw ParseError("graph6: truncated vertex count", base + text.size());
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | Sextet(text, pos + i, base);
    pos += groups;
    if (n > kMaxOrder || n > 1'000'000) {
      throw ParseError("graph6: vertex count too large", base);
    }
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    throw ParseError("graph6: expected " + std::to_string(body) +
                         " data bytes for n=" + std::to_string(n) + ", found " +
                         std::to_string(text.size() - pos),
                     base + std::min(text.size(), pos + body));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  const int order = static_cast<int>(n);
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int group = Sextet(text, pos + k / 6, base);
      if (group & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  }
  if (body > 0) {
    const int last = Sextet(text, pos + body - 1, base);
    const int padding = static_cast<int>(body * 6 - bits);
    if (last & ((1 << padding) - 1)) {
      throw ParseError("graph6: nonzero padding bits", base + pos + body - 1);
    }
  }
  return Graph(order, edges);
}

std::string EmitGraph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  AppendOrder(out, n);
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  }
  return out;
}

std::vector<Graph> ParseGraph6Lines(std::string_view text) {
  std::vector<Graph> graphs;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        graphs.push_back(ParseGraph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), start + e.offset());
      }
    }
    start = end + 1;
  }
  return graphs;
}

namespace {

// Whitespace-separated integer reader that remembers byte offsets.
class TokenReader {
 public:
  explicit TokenReader(std::string_view text) : text_(text) {}

  bool AtEnd() {
    SkipSpace();
    return pos_ >= text_.size();
  }

  long long Next(const char* what) {
    SkipSpace();
    if (pos_ >= text_.size()) {
      throw ParseError(std::string("edge list: missing ") + what, pos_);
    }
    long long value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || (ptr != end && !IsSpace(*ptr))) {
      throw ParseError(std::string("edge list: malformed ") + what, pos_);
    }
    last_ = pos_;
    pos_ += ptr - begin;
    return value;
  }

  std::size_t last_offset() const { return last_; }

 private:
  static bool IsSpace(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  }
  void SkipSpace() {
    while (pos_ < text_.size() && IsSpace(text_[pos_])) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t last_ = 0;
};

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  TokenReader reader(text);
  const long long n = reader.Next("vertex count");
  if (n < 0 || n > 1'000'000) {
    throw ParseError("edge list: bad vertex count", reader.last_offset());
  }
  const long long m = reader.Next("edge count");
  if (m < 0) throw ParseError("edge list: bad edge count", reader.last_offset());
  std::vector<Edge> edges;
  std::vector<std::size_t> offsets;
  for (long long i = 0; i < m; ++i) {
    const long long u = reader.Next("edge endpoint");
    const std::size_t at = reader.last_offset();
    const long long v = reader.Next("edge endpoint");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: vertex out of range", at);
    }
    if (u == v) throw ParseError("edge list: loop", at);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    offsets.push_back(at);
  }
  if (!reader.AtEnd()) {
    throw ParseError("edge list: more than m edges", text.size());
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const GraphError& e) {
    // Only duplicates can reach here; report the second occurrence.
    std::set<Edge> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!seen.insert(edges[i]).second) {
        throw ParseError("edge list: duplicate edge", offsets[i]);
      }
    }
    throw ParseError(std::string("edge list: ") + e.what(), 0);
  }
}

std::string EmitEdgeList(const Graph& g) {
  std::ostringstream out;
  out << g.order() << " " << g.size() << "\n";
  for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

std::string ToDot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace yfree
