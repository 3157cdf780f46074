#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "reconkit/graph.hpp"

namespace reconkit {

class Graph6Error : public Error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : Error("graph6: " + what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// graph6: byte n+63, then the upper triangle column by column
// (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte, each +63.
inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = bits = 0;
      }
    }
  }
  if (bits) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  if (text.size() >= 10 && text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
  if (text.empty()) throw Graph6Error("empty input", 0);
  const auto byte = [&](std::size_t i) {
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw Graph6Error("byte " + std::to_string(c) + " outside 63..126", i);
    return c - 63;
  };
  if (text[0] == '~') throw Graph6Error("long-form header not supported (vertex cap is 32)", 0);
  const int n = byte(0);
  if (n > kMaxVertices) throw Graph6Error("order " + std::to_string(n) + " exceeds vertex cap", 0);
  const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() < 1 + nbytes) throw Graph6Error("truncated adjacency data", text.size());
  if (text.size() > 1 + nbytes) throw Graph6Error("trailing bytes", 1 + nbytes);
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int b = byte(1 + k / 6);
      if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (nbits % 6) {
    int last = byte(nbytes);
    if (last & ((1 << (6 - nbits % 6)) - 1)) throw Graph6Error("nonzero padding bits", nbytes);
  }
  return g;
}

}  // namespace reconkit
