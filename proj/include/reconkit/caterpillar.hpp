#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reconkit/graph.hpp"

namespace reconkit {

/// Leaf counts <a_1, ..., a_n> along the spine of a caterpillar. a_1, a_n >= 1; interior entries
/// >= 0. Comparison is modulo reversal.
class CaterpillarSeq {
 public:
  explicit CaterpillarSeq(std::vector<int> a) : a_(std::move(a)) {
    if (a_.empty()) throw Error("caterpillar sequence is empty");
    for (int x : a_)
      if (x < 0) throw Error("caterpillar sequence " + str() + " has a negative entry");
    if (a_.front() < 1 || a_.back() < 1) throw Error("caterpillar sequence " + str() + " must start and end with >= 1");
  }

  CaterpillarSeq(std::initializer_list<int> a) : CaterpillarSeq(std::vector<int>(a)) {}

  /// Comma-separated integers, e.g. "2,0,2".
  static CaterpillarSeq parse(std::string_view text) {
    std::vector<int> a;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      char* end = nullptr;
      long v = std::strtol(item.c_str(), &end, 10);
      if (item.empty() || *end != '\0') throw Error("caterpillar sequence: bad entry '" + item + "'");
      a.push_back(static_cast<int>(v));
    }
    return CaterpillarSeq(std::move(a));
  }

  const std::vector<int>& entries() const { return a_; }
  int length() const { return static_cast<int>(a_.size()); }
  /// 1-based, as in <a_1, ..., a_n>.
  int at(int i) const { return a_.at(i - 1); }
  int leaves() const {
    int s = 0;
    for (int x : a_) s += x;
    return s;
  }
  int vertex_count() const { return length() + leaves(); }

  CaterpillarSeq reversed() const { return CaterpillarSeq(std::vector<int>(a_.rbegin(), a_.rend())); }

  /// The lexicographically smaller of the two orientations.
  CaterpillarSeq oriented() const {
    std::vector<int> r(a_.rbegin(), a_.rend());
    return r < a_ ? CaterpillarSeq(std::move(r)) : *this;
  }

  bool is_palindrome() const { return std::equal(a_.begin(), a_.end(), a_.rbegin()); }

  bool is_path() const {
    if (length() == 1) return a_[0] <= 2;
    if (a_.front() != 1 || a_.back() != 1) return false;
    return std::all_of(a_.begin() + 1, a_.end() - 1, [](int x) { return x == 0; });
  }

  /// Number of spine neighbours of v_i.
  int spine_degree(int i) const {
    if (length() == 1) return 0;
    return (i == 1 || i == length()) ? 1 : 2;
  }

  /// Whether deleting one leaf edge at v_i keeps the spine.
  bool keeps_spine(int i) const {
    const int a = at(i);
    if (length() == 1) return a >= 3;
    if (i == 1 || i == length()) return a >= 2;
    return a >= 1;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
    return s;
  }

  friend bool operator==(const CaterpillarSeq& x, const CaterpillarSeq& y) {
    return x.oriented().a_ == y.oriented().a_;
  }
  friend std::strong_ordering operator<=>(const CaterpillarSeq& x, const CaterpillarSeq& y) {
    return x.oriented().a_ <=> y.oriented().a_;
  }

 private:
  std::vector<int> a_;
};

/// A spine-preserving end-edge deletion: the sequence with entry `position` decremented, plus
/// the degree d of the deleted edge. Equality ignores the position.
struct Reduction {
  CaterpillarSeq seq;
  int degree = 0;
  int position = 0;

  friend bool operator==(const Reduction& x, const Reduction& y) { return x.seq == y.seq && x.degree == y.degree; }
};

inline Reduction reduce_at(const CaterpillarSeq& s, int i) {
  if (i < 1 || i > s.length() || !s.keeps_spine(i))
    throw Error("position " + std::to_string(i) + " of <" + s.str() + "> is not a spine-preserving reduction");
  std::vector<int> a = s.entries();
  --a[i - 1];
  return {CaterpillarSeq(std::move(a)), s.at(i) + s.spine_degree(i) - 1, i};
}

/// One reduction per spine-preserving position, in position order.
inline std::vector<Reduction> reductions(const CaterpillarSeq& s) {
  std::vector<Reduction> out;
  for (int i = 1; i <= s.length(); ++i)
    if (s.keeps_spine(i)) out.push_back(reduce_at(s, i));
  return out;
}

namespace detail {

using ReductionKey = std::pair<std::vector<int>, int>;

// Every leaf edge at v_i gives the same reduction, so position i has multiplicity a_i.
inline std::map<ReductionKey, int> reduction_multiset(const CaterpillarSeq& s, bool with_degree) {
  std::map<ReductionKey, int> out;
  for (const Reduction& r : reductions(s))
    out[{r.seq.oriented().entries(), with_degree ? r.degree : 0}] += s.at(r.position);
  return out;
}

inline std::set<CaterpillarSeq> reconstruct_impl(const CaterpillarSeq& r1, std::optional<int> d1,
                                                 const CaterpillarSeq& r2, std::optional<int> d2) {
  if (r1.length() != r2.length() || r1.leaves() != r2.leaves())
    throw Error("reductions <" + r1.str() + "> and <" + r2.str() + "> cannot come from one sequence");
  const bool with_degree = d1.has_value();
  std::map<ReductionKey, int> need;
  ++need[{r1.oriented().entries(), d1.value_or(0)}];
  ++need[{r2.oriented().entries(), d2.value_or(0)}];

  std::set<CaterpillarSeq> out;
  for (int k = 0; k < r1.length(); ++k) {
    std::vector<int> a = r1.entries();
    ++a[k];
    CaterpillarSeq cand(std::move(a));
    auto have = reduction_multiset(cand, with_degree);
    bool ok = std::all_of(need.begin(), need.end(), [&](const auto& kv) {
      auto it = have.find(kv.first);
      return it != have.end() && it->second >= kv.second;
    });
    if (ok) out.insert(cand.oriented());
  }
  if (out.empty())
    throw Error("no caterpillar sequence has both <" + r1.str() + "> and <" + r2.str() + "> as reductions");
  return out;
}

}  // namespace detail

/// Every sequence (up to reversal) having both sequences among its reductions, taken from two
/// distinct end-edges. Degrees are not compared: this is reconstruction from edge-cards.
inline std::set<CaterpillarSeq> reconstruct(const CaterpillarSeq& r1, const CaterpillarSeq& r2) {
  return detail::reconstruct_impl(r1, std::nullopt, r2, std::nullopt);
}

/// As above, but the edge degrees must match as well: reconstruction from da-ecards.
inline std::set<CaterpillarSeq> reconstruct(const Reduction& r1, const Reduction& r2) {
  return detail::reconstruct_impl(r1.seq, r1.degree, r2.seq, r2.degree);
}

/// The two conjugate positions (j, n-j+1), j < n-j+1, when a_1 = a_n and exactly one conjugate
/// pair differs, by exactly one.
inline std::optional<std::pair<int, int>> single_unequal_conjugates(const CaterpillarSeq& s) {
  const int n = s.length();
  if (n < 2 || s.at(1) != s.at(n)) return std::nullopt;
  std::optional<std::pair<int, int>> found;
  for (int j = 1; j < n - j + 1; ++j) {
    if (s.at(j) == s.at(n - j + 1)) continue;
    if (found || std::abs(s.at(j) - s.at(n - j + 1)) != 1) return std::nullopt;
    found = std::pair{j, n - j + 1};
  }
  return found;
}

/// Positions (i, j), i <= j, of two leaf edges whose da-ecards pin the sequence down. Tries the
/// end pair (1, n), or the unequal conjugate pair when the ends agree, then every pair in order.
inline std::pair<int, int> identifying_pair(const CaterpillarSeq& s) {
  if (s.is_path()) throw Error("identifying_pair: <" + s.str() + "> is a path");
  int edges = 0;
  for (int i = 1; i <= s.length(); ++i)
    if (s.keeps_spine(i)) edges += s.at(i);
  if (edges < 2)
    throw Error("identifying_pair: <" + s.str() + "> has fewer than two spine-preserving end-edges");

  auto identifies = [&](int i, int j) {
    if (!s.keeps_spine(i) || !s.keeps_spine(j) || (i == j && s.at(i) < 2)) return false;
    auto got = reconstruct(reduce_at(s, i), reduce_at(s, j));
    return got.size() == 1 && *got.begin() == s;
  };

  const int n = s.length();
  std::pair<int, int> preferred{1, n};
  if (auto conj = single_unequal_conjugates(s)) preferred = *conj;
  if (identifies(preferred.first, preferred.second)) return preferred;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      if (identifies(i, j)) return {i, j};
  throw Error("identifying_pair: no two spine-preserving end-edges of <" + s.str() + "> identify it");
}

/// The caterpillar sequence of a tree, in its lexicographically least orientation; nullopt when
/// the tree is not a caterpillar or has no spine (fewer than three vertices).
inline std::optional<CaterpillarSeq> seq_of(const Graph& t) {
  if (!is_tree(t)) throw Error("seq_of: input is not a tree");
  const int n = t.order();
  if (n < 3) return std::nullopt;
  Row leaves = 0;
  for (int v = 0; v < n; ++v)
    if (t.degree(v) == 1) leaves |= bit(v);
  const Row spine = low_mask(n) & ~leaves;
  int start = -1;
  for (Row r = spine; r; r &= r - 1) {
    int v = std::countr_zero(r);
    int d = std::popcount(t.row(v) & spine);
    if (d > 2) return std::nullopt;
    if (d <= 1 && start < 0) start = v;
  }
  if (start < 0) return std::nullopt;
  std::vector<int> a;
  Row seen = 0;
  for (int v = start; v >= 0;) {
    seen |= bit(v);
    a.push_back(std::popcount(t.row(v) & leaves));
    Row next = t.row(v) & spine & ~seen;
    v = next ? std::countr_zero(next) : -1;
  }
  if (seen != spine) return std::nullopt;
  return CaterpillarSeq(std::move(a)).oriented();
}

}  // namespace reconkit
