#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reconkit/canonical.hpp"
#include "reconkit/caterpillar.hpp"
#include "reconkit/graph.hpp"
#include "reconkit/graph6.hpp"

namespace reconkit {

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(what);
}

}  // namespace detail

// The named families come back canonically labeled.

inline Graph path(int n) {
  detail::require(n >= 1 && n <= kMaxVertices, "path: need 1 <= n <= 32");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return canonical_graph(g);
}

/// K_{1,n}.
inline Graph star(int n) {
  detail::require(n >= 1 && n < kMaxVertices, "star: need 1 <= n <= 31");
  Graph g(n + 1);
  for (int v = 1; v <= n; ++v) g.add_edge(0, v);
  return canonical_graph(g);
}

inline Graph complete(int n) {
  detail::require(n >= 1 && n <= kMaxVertices, "complete: need 1 <= n <= 32");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return canonical_graph(g);
}

inline Graph complete_bipartite(int p, int q) {
  detail::require(p >= 1 && q >= 1 && p + q <= kMaxVertices, "complete_bipartite: need p, q >= 1 and p + q <= 32");
  Graph g(p + q);
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < q; ++v) g.add_edge(u, p + v);
  return canonical_graph(g);
}

inline Graph cycle(int n) {
  detail::require(n >= 3 && n <= kMaxVertices, "cycle: need 3 <= n <= 32");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return canonical_graph(g);
}

/// k vertex-disjoint copies of h.
inline Graph disjoint_union(int k, const Graph& h) {
  detail::require(k >= 1, "disjoint_union: need k >= 1");
  detail::require(k * h.order() <= kMaxVertices, "disjoint_union: more than 32 vertices");
  Graph g = h;
  for (int i = 1; i < k; ++i) g = disjoint_union(g, h);
  return g;
}

/// Spine v_1..v_n on vertices 0..n-1, then the leaves of v_1, v_2, ... in order.
inline Graph caterpillar_graph(const CaterpillarSeq& s) {
  detail::require(s.vertex_count() <= kMaxVertices, "caterpillar_graph: more than 32 vertices");
  Graph g(s.vertex_count());
  const int n = s.length();
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  int next = n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < s.entries()[i]; ++k) g.add_edge(i, next++);
  return g;
}

/// Paths with the given numbers of edges sharing the endpoint 0.
inline Graph spider(const std::vector<int>& legs) {
  detail::require(legs.size() >= 3, "spider: need at least three legs");
  int n = 1;
  for (int len : legs) {
    detail::require(len >= 1, "spider: legs must have length >= 1");
    n += len;
  }
  detail::require(n <= kMaxVertices, "spider: more than 32 vertices");
  Graph g(n);
  int next = 1;
  for (int len : legs) {
    int prev = 0;
    for (int k = 0; k < len; ++k) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

/// K_{1,n} with every edge subdivided p times.
inline Graph subdivided_star(int n, int p) { return spider(std::vector<int>(n, p + 1)); }

namespace detail {

inline std::vector<int> int_list(std::string_view text, std::string_view what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string item(text.substr(pos, comma - pos));
    char* end = nullptr;
    long v = std::strtol(item.c_str(), &end, 10);
    if (item.empty() || *end != '\0') throw Error(std::string(what) + ": bad integer '" + item + "'");
    out.push_back(static_cast<int>(v));
    pos = comma + 1;
  }
  return out;
}

inline int one_int(std::string_view text, std::string_view what) {
  auto v = int_list(text, what);
  if (v.size() != 1) throw Error(std::string(what) + ": expected one integer");
  return v[0];
}

inline Graph parse_family_term(std::string_view term) {
  const auto colon = term.find(':');
  if (colon == std::string_view::npos) throw Error("family: missing ':' in '" + std::string(term) + "'");
  const std::string_view kind = term.substr(0, colon);
  const std::string_view arg = term.substr(colon + 1);
  if (kind == "U") {
    const auto star_pos = arg.find('*');
    if (star_pos == std::string_view::npos) throw Error("family: U needs 'U:k*<spec>'");
    return disjoint_union(one_int(arg.substr(0, star_pos), "U"), parse_family_term(arg.substr(star_pos + 1)));
  }
  if (kind == "P") return path(one_int(arg, "P"));
  if (kind == "S") return star(one_int(arg, "S"));
  if (kind == "K") return complete(one_int(arg, "K"));
  if (kind == "C") return cycle(one_int(arg, "C"));
  if (kind == "Kpq") {
    auto v = int_list(arg, "Kpq");
    if (v.size() != 2) throw Error("family: Kpq needs 'Kpq:p,q'");
    return complete_bipartite(v[0], v[1]);
  }
  if (kind == "cat") return caterpillar_graph(CaterpillarSeq(int_list(arg, "cat")));
  if (kind == "spider") return spider(int_list(arg, "spider"));
  throw Error("family: unknown kind '" + std::string(kind) + "'");
}

}  // namespace detail

/// Family grammar: "P:n", "S:n", "K:n", "Kpq:p,q", "C:n", "U:k*<spec>", "cat:a1,...,an",
/// "spider:l1,l2,...", and "A+B" for the disjoint union of two specs.
inline Graph parse_family(std::string_view text) {
  Graph g;
  bool first = true;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t plus = text.find('+', pos);
    if (plus == std::string_view::npos) plus = text.size();
    Graph term = detail::parse_family_term(text.substr(pos, plus - pos));
    g = first ? term : disjoint_union(g, term);
    first = false;
    pos = plus + 1;
  }
  return g;
}

/// A graph given either in the family grammar or as graph6 (graph6 never contains ':').
inline Graph parse_graph_input(std::string_view text) {
  return text.find(':') != std::string_view::npos ? parse_family(text) : parse_graph6(text);
}

/// One tree per isomorphism class on n vertices, canonically labeled, sorted by certificate.
/// Built by attaching a leaf to every vertex of every tree on n - 1 vertices.
inline std::vector<Graph> enumerate_trees(int n) {
  detail::require(n >= 1 && n <= 12, "enumerate_trees: need 1 <= n <= 12");
  std::map<Certificate, Graph> level;
  Graph k1(1);
  level.emplace(canonical_form(k1), k1);
  for (int order = 2; order <= n; ++order) {
    std::map<Certificate, Graph> next;
    for (const auto& [cert, t] : level) {
      for (int v = 0; v < t.order(); ++v) {
        Graph bigger(order);
        for (const Edge& e : t.edges()) bigger.add_edge(e.u, e.v);
        bigger.add_edge(v, order - 1);
        Certificate c = canonical_form(bigger);
        if (!next.count(c)) next.emplace(c, c.graph());
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [cert, t] : level) out.push_back(std::move(t));
  return out;
}

/// One graph per isomorphism class on n vertices (optionally with exactly m edges),
/// canonically labeled, sorted by certificate. Built edge by edge from the empty graph.
inline std::vector<Graph> enumerate_graphs(int n, std::optional<int> m = std::nullopt) {
  detail::require(n >= 1 && n <= 8, "enumerate_graphs: need 1 <= n <= 8");
  const int max_edges = n * (n - 1) / 2;
  if (m && (*m < 0 || *m > max_edges)) return {};
  std::map<Certificate, Graph> level;
  Graph empty(n);
  level.emplace(canonical_form(empty), empty);
  std::map<Certificate, Graph> all = level;
  const int top = m.value_or(max_edges);
  for (int edges = 1; edges <= top; ++edges) {
    std::map<Certificate, Graph> next;
    for (const auto& [cert, g] : level)
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          Certificate c = canonical_form(g.with_edge(u, v));
          if (!next.count(c)) next.emplace(c, c.graph());
        }
    level = std::move(next);
    if (!m) all.insert(level.begin(), level.end());
  }
  std::vector<Graph> out;
  for (auto& [cert, g] : (m ? level : all)) out.push_back(g);
  return out;
}

}  // namespace reconkit
