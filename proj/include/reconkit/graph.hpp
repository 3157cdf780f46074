#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reconkit {

inline constexpr int kMaxVertices = 32;

/// One adjacency row: bit j set iff the vertex is adjacent to j.
using Row = std::uint32_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Row bit(int v) { return Row{1} << v; }

inline Row low_mask(int n) { return n >= 32 ? ~Row{0} : (Row{1} << n) - 1; }

/// Labeled simple undirected graph on vertices 0..n-1, n <= 32.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw Error("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }

  Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }

  int size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
  }

  Row row(int v) const { return adj_[v]; }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }

  int degree(int v) const { return std::popcount(adj_[v]); }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  Graph with_edge(int u, int v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
  }

  Graph without_edge(int u, int v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
  }

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (Row r = adj_[u] & ~low_mask(u + 1); r; r &= r - 1) out.push_back({u, std::countr_zero(r)});
    return out;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
  }

  /// Vertex v becomes perm[v] in the result.
  Graph relabeled(std::span<const int> perm) const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
      for (Row r = adj_[u]; r; r &= r - 1) g.adj_[perm[u]] |= bit(perm[std::countr_zero(r)]);
    return g;
  }

  /// Subgraph induced by `mask`, vertices renumbered in increasing label order.
  Graph induced(Row mask) const {
    std::array<int, kMaxVertices> index{};
    int k = 0;
    for (Row r = mask; r; r &= r - 1) index[std::countr_zero(r)] = k++;
    Graph g(k);
    for (Row r = mask; r; r &= r - 1) {
      int u = std::countr_zero(r);
      for (Row s = adj_[u] & mask; s; s &= s - 1) g.adj_[index[u]] |= bit(index[std::countr_zero(s)]);
    }
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
  }

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
      throw Error("invalid edge " + std::to_string(u) + "-" + std::to_string(v) + " for order " +
                  std::to_string(n_));
  }

  int n_ = 0;
  std::array<Row, kMaxVertices> adj_{};
};

/// Number of edges adjacent to uv: deg(u) + deg(v) - 2.
inline int edge_degree(const Graph& g, Edge e) {
  if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v))
    throw Error("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
  return g.degree(e.u) + g.degree(e.v) - 2;
}

/// Vertices reachable from `start` using only vertices in `allowed`.
inline Row reach(const Graph& g, int start, Row allowed) {
  Row seen = bit(start);
  Row frontier = seen;
  while (frontier) {
    Row next = 0;
    for (Row r = frontier; r; r &= r - 1) next |= g.row(std::countr_zero(r));
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Vertex sets of the connected components, in order of least vertex.
inline std::vector<Row> component_masks(const Graph& g, Row allowed) {
  std::vector<Row> out;
  for (Row left = allowed; left;) {
    Row c = reach(g, std::countr_zero(left), allowed);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

inline std::vector<Row> component_masks(const Graph& g) { return component_masks(g, low_mask(g.order())); }

inline bool is_connected(const Graph& g) { return g.order() <= 1 || component_masks(g).size() == 1; }

inline bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g); }

inline int min_degree(const Graph& g) {
  int d = g.order() ? g.degree(0) : 0;
  for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

/// Vertex-disjoint union; vertices of b follow those of a.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (const Edge& e : a.edges()) g.add_edge(e.u, e.v);
  for (const Edge& e : b.edges()) g.add_edge(e.u + a.order(), e.v + a.order());
  return g;
}

}  // namespace reconkit
