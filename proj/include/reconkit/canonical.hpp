#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "reconkit/graph.hpp"
#include "reconkit/graph6.hpp"

namespace reconkit {

/// Canonical form of a graph. Two certificates are equal iff the graphs are isomorphic.
/// `canon` is the graph6 string of the canonically relabeled graph.
struct Certificate {
  int n = 0;
  int m = 0;
  std::string canon;

  Graph graph() const { return parse_graph6(canon); }

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend std::strong_ordering operator<=>(const Certificate&, const Certificate&) = default;
};

namespace detail {

struct Partition {
  int count = 0;
  std::array<Row, kMaxVertices> cells{};
};

// Split cells by neighbour counts into every cell until the partition is equitable.
// Sub-cells are ordered by count, so the result does not depend on vertex names.
inline void refine(const Graph& g, Partition& p) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int w = 0; w < p.count; ++w) {
      const Row splitter = p.cells[w];
      Partition q;
      bool split = false;
      for (int c = 0; c < p.count; ++c) {
        const Row cell = p.cells[c];
        if (std::has_single_bit(cell)) {
          q.cells[q.count++] = cell;
          continue;
        }
        std::array<Row, kMaxVertices + 1> by_count{};
        int lo = kMaxVertices, hi = 0;
        for (Row r = cell; r; r &= r - 1) {
          int v = std::countr_zero(r);
          int k = std::popcount(g.row(v) & splitter);
          by_count[k] |= bit(v);
          lo = std::min(lo, k);
          hi = std::max(hi, k);
        }
        if (lo == hi) {
          q.cells[q.count++] = cell;
          continue;
        }
        split = true;
        for (int k = lo; k <= hi; ++k)
          if (by_count[k]) q.cells[q.count++] = by_count[k];
      }
      if (split) {
        p = q;
        changed = true;
      }
    }
  }
}

using Perm = std::array<int, kMaxVertices>;
using Code = std::array<Row, kMaxVertices>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  Perm run() {
    if (n_ == 0) return {};
    Partition p;
    p.count = 1;
    p.cells[0] = low_mask(n_);
    refine(g_, p);
    search(p, 0);
    return best_.lab;
  }

 private:
  struct Leaf {
    Perm lab{};
    Code code{};
    std::vector<int> path;
  };

  int search(const Partition& p, int depth) {
    int target = -1;
    for (int c = 0; c < p.count; ++c) {
      int sz = std::popcount(p.cells[c]);
      if (sz > 1 && (target < 0 || sz < std::popcount(p.cells[target]))) target = c;
    }
    if (target < 0) return leaf(p);

    std::vector<int> explored;
    for (Row r = p.cells[target]; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (!explored.empty() && same_orbit_as_explored(v, explored)) continue;
      Partition child;
      for (int c = 0; c < p.count; ++c) {
        if (c == target) {
          child.cells[child.count++] = bit(v);
          child.cells[child.count++] = p.cells[c] & ~bit(v);
        } else {
          child.cells[child.count++] = p.cells[c];
        }
      }
      refine(g_, child);
      path_.push_back(v);
      int jump = search(child, depth + 1);
      path_.pop_back();
      explored.push_back(v);
      if (jump < depth) return jump;
    }
    return INT_MAX;
  }

  int leaf(const Partition& p) {
    Leaf cur;
    for (int c = 0; c < n_; ++c) cur.lab[std::countr_zero(p.cells[c])] = c;
    for (int u = 0; u < n_; ++u) {
      Row code_row = 0;
      for (Row r = g_.row(u); r; r &= r - 1) code_row |= bit(cur.lab[std::countr_zero(r)]);
      cur.code[cur.lab[u]] = code_row;
    }
    cur.path = path_;

    if (!have_first_) {
      first_ = cur;
      best_ = cur;
      have_first_ = true;
      return INT_MAX;
    }
    int jump = INT_MAX;
    if (equal_code(cur.code, first_.code)) jump = std::min(jump, automorphism(cur, first_));
    const int cmp = compare_code(cur.code, best_.code);
    if (cmp < 0) {
      best_ = cur;
    } else if (cmp == 0) {
      jump = std::min(jump, automorphism(cur, best_));
    }
    return jump;
  }

  // Records the automorphism mapping `cur` onto `ref`; returns the depth to resume at when
  // it also carries the current search node onto an already explored one.
  int automorphism(const Leaf& cur, const Leaf& ref) {
    Perm inv{};
    for (int v = 0; v < n_; ++v) inv[ref.lab[v]] = v;
    Perm gamma{};
    for (int v = 0; v < n_; ++v) gamma[v] = inv[cur.lab[v]];
    if (autos_.size() < kMaxGenerators) autos_.push_back(gamma);

    const std::size_t depth = cur.path.size();
    std::size_t common = 0;
    while (common < depth && common < ref.path.size() && cur.path[common] == ref.path[common]) ++common;
    if (common >= depth || common >= ref.path.size()) return INT_MAX;
    for (std::size_t k = 0; k < common; ++k)
      if (gamma[cur.path[k]] != cur.path[k]) return INT_MAX;
    if (gamma[cur.path[common]] != ref.path[common]) return INT_MAX;
    return static_cast<int>(common);
  }

  // Orbits of the known automorphisms that fix the current path pointwise.
  bool same_orbit_as_explored(int v, const std::vector<int>& explored) const {
    std::array<int, kMaxVertices> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& gamma : autos_) {
      bool fixes = std::all_of(path_.begin(), path_.end(), [&](int u) { return gamma[u] == u; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
  }

  bool equal_code(const Code& a, const Code& b) const { return std::equal(a.begin(), a.begin() + n_, b.begin()); }

  int compare_code(const Code& a, const Code& b) const {
    for (int i = 0; i < n_; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
  }

  static constexpr std::size_t kMaxGenerators = 256;

  const Graph& g_;
  const int n_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<Perm> autos_;
  std::vector<int> path_;
};

}  // namespace detail

/// Canonical relabeling: vertex v of g becomes result[v].
inline std::vector<int> canonical_labeling(const Graph& g) {
  detail::Perm lab = detail::Canonizer(g).run();
  return {lab.begin(), lab.begin() + g.order()};
}

inline Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

inline Certificate canonical_form(const Graph& g) {
  return Certificate{g.order(), g.size(), write_graph6(canonical_graph(g))};
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace reconkit
