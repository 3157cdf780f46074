#pragma once

// Independent reference implementations used only by the tests. None of them go through the
// library's canonical labeling, deck, or enumeration code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "reconkit/graph.hpp"

namespace oracle {

using reconkit::Graph;

/// Upper-triangle bits of g under the relabeling v -> perm[v].
inline std::uint64_t encode(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::uint64_t code = 0;
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[perm[v]] = v;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(inv[i], inv[j]) ? 1u : 0u);
  return code;
}

/// Maximum encoding over all n! relabelings. Only for n <= 9.
inline std::uint64_t brute_canon(const Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = 0;
  do best = std::max(best, encode(g, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && brute_canon(a) == brute_canon(b);
}

/// Labeled graph on n vertices whose edge set is the bitmask `mask` over pairs (i<j) in row order.
inline Graph from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if ((mask >> k) & 1u) g.add_edge(i, j);
  return g;
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline std::vector<int> random_perm(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Labeled tree from a Prüfer sequence over 0..n-1 (length n - 2).
inline Graph prufer_tree(int n, const std::vector<int>& seq) {
  Graph t(n);
  if (n == 1) return t;
  if (n == 2) {
    t.add_edge(0, 1);
    return t;
  }
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  for (int x : seq) {
    for (int leaf = 0; leaf < n; ++leaf)
      if (degree[leaf] == 1) {
        t.add_edge(leaf, x);
        --degree[leaf];
        --degree[x];
        break;
      }
  }
  int u = -1, v = -1;
  for (int w = 0; w < n; ++w)
    if (degree[w] == 1) (u < 0 ? u : v) = w;
  t.add_edge(u, v);
  return t;
}

/// AHU canonical string of a free tree: the least rooted encoding over its centre vertices.
inline std::string tree_canon(const Graph& t) {
  const int n = t.order();
  std::function<std::string(int, int)> rooted = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int w = 0; w < n; ++w)
      if (w != parent && t.adjacent(v, w)) kids.push_back(rooted(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
  };
  // Centre by repeated leaf stripping.
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w = 0; w < n; ++w)
        if (t.adjacent(v, w) && --degree[w] == 1) next.push_back(w);
    layer = next;
  }
  std::string best;
  for (int c : layer) {
    std::string s = rooted(c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

/// Number of free trees on n vertices: labeled trees via Prüfer sequences, deduplicated by the
/// AHU string. With `degree_ordered`, only sequences where vertex v occurs at least as often as
/// v + 1 are decoded (every tree has a labeling with non-increasing degrees).
inline std::size_t count_free_trees(int n, bool degree_ordered) {
  if (n <= 2) return 1;
  std::set<std::string> seen;
  const int len = n - 2;
  std::vector<int> seq(len, 0);
  auto visit = [&](const std::vector<int>& s) { seen.insert(tree_canon(prufer_tree(n, s))); };
  if (!degree_ordered) {
    while (true) {
      visit(seq);
      int k = len - 1;
      while (k >= 0 && seq[k] == n - 1) seq[k--] = 0;
      if (k < 0) break;
      ++seq[k];
    }
    return seen.size();
  }
  // Non-increasing occurrence counts c_0 >= c_1 >= ...; then every arrangement of that multiset.
  std::vector<int> counts;
  std::function<void(int, int)> partitions = [&](int left, int cap) {
    if (left == 0) {
      if (static_cast<int>(counts.size()) > n) return;
      std::vector<int> s;
      for (int v = 0; v < static_cast<int>(counts.size()); ++v) s.insert(s.end(), counts[v], v);
      do visit(s);
      while (std::next_permutation(s.begin(), s.end()));
      return;
    }
    for (int c = std::min(left, cap); c >= 1; --c) {
      counts.push_back(c);
      partitions(left - c, c);
      counts.pop_back();
    }
  };
  partitions(len, len);
  return seen.size();
}

}  // namespace oracle
