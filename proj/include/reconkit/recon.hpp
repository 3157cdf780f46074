#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "reconkit/canonical.hpp"
#include "reconkit/deck.hpp"
#include "reconkit/graph.hpp"
#include "reconkit/structure.hpp"

namespace reconkit {

/// Outcome of a reconstruction-number computation.
///
/// For ern/dern `witness` is the reported determining sub-multiset (lexicographically least among
/// those of minimum size). For adv-ern/adv-dern it is the largest collection still blocked, i.e.
/// the cards shared with `blocker_example`. An empty `value` means Indeterminate: some blocker
/// carries the whole deck.
struct ReconResult {
  std::optional<int> value;
  std::vector<std::pair<Card, int>> witness;
  int max_shared = 0;
  std::optional<Graph> blocker_example;

  bool indeterminate() const { return !value.has_value(); }
};

/// All graphs card + uv over non-adjacent pairs u, v, one per isomorphism class. With `d`, only
/// pairs whose degree sum in the card is d, so the new edge has degree d.
inline std::map<Certificate, Graph> extensions(const Graph& card, std::optional<int> d = std::nullopt) {
  std::map<Certificate, Graph> out;
  const int n = card.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (card.adjacent(u, v)) continue;
      if (d && card.degree(u) + card.degree(v) != *d) continue;
      Graph h = card.with_edge(u, v);
      Certificate c = canonical_form(h);
      out.try_emplace(std::move(c), std::move(h));
    }
  return out;
}

/// Number of non-adjacent pairs in the card whose degree sum is d.
inline int degree_sum_pairs(const Graph& card, int d) {
  int count = 0;
  for (int u = 0; u < card.order(); ++u)
    for (int v = u + 1; v < card.order(); ++v)
      if (!card.adjacent(u, v) && card.degree(u) + card.degree(v) == d) ++count;
  return count;
}

/// The sufficient condition for a single da-ecard to determine its graph: d = 0, or the endpoints
/// of the deleted edge are the only non-adjacent pair with degree sum d.
inline bool unique_placement(const Graph& card, int d) { return d == 0 || degree_sum_pairs(card, d) == 1; }

/// True iff the da-ecard (card, d) of `origin` determines origin up to isomorphism.
inline bool determines(const Graph& card, int d, const Graph& origin) {
  Certificate cc = canonical_form(card);
  if (da_edeck(origin).multiplicity({cc, d}) == 0) throw Error("determines: (card, d) is not a da-ecard of origin");
  if (unique_placement(card, d)) return true;
  auto ext = extensions(card, d);
  return ext.size() == 1 && ext.begin()->first == canonical_form(origin);
}

enum class TreeTest { tree, unknown };

/// Recognises a tree from two edge-cards: each must be two tree components, with different
/// pairs of component orders.
inline TreeTest is_tree_from_two_cards(const Graph& c1, const Graph& c2) {
  auto orders = [](const Graph& c) -> std::optional<std::pair<int, int>> {
    auto comps = components(c);
    if (comps.size() != 2) return std::nullopt;
    for (const auto& k : comps)
      if (!is_tree(k.graph)) return std::nullopt;
    int a = comps[0].order(), b = comps[1].order();
    return std::pair{std::min(a, b), std::max(a, b)};
  };
  auto a = orders(c1), b = orders(c2);
  if (a && b && *a != *b) return TreeTest::tree;
  return TreeTest::unknown;
}

/// Computes reconstruction numbers, caching the card lists of blockers by certificate.
/// Not thread-safe; use one instance per task.
class Reconstructor {
 public:
  /// All graphs H not isomorphic to g that share at least one (da-)ecard with g.
  std::map<Certificate, Graph> blockers(const Graph& g, bool da) {
    Deck deck = deck_of(g, da);
    const Certificate self = canonical_form(g);
    std::map<Certificate, Graph> out;
    for (const auto& [card, mult] : deck.entries()) {
      for (auto& [cert, h] : extensions(card.graph.graph(), card.degree))
        if (cert != self) out.try_emplace(cert, std::move(h));
    }
    return out;
  }

  ReconResult recon_number(const Graph& g, bool da) {
    Profile p = profile(g, da);
    ReconResult res = base_result(p);
    if (p.full_blocked) return res;

    std::vector<std::vector<int>> maximal = maximal_rows(p.counts);
    const int nkeys = static_cast<int>(p.keys.size());
    for (int k = 1; k <= p.total; ++k) {
      std::optional<std::vector<std::pair<Card, int>>> best;
      std::vector<int> pick(nkeys, 0);
      enumerate(p, maximal, pick, 0, k, best);
      if (best) {
        res.value = k;
        res.witness = std::move(*best);
        return res;
      }
    }
    return res;  // unreachable: the full deck is unblocked here
  }

  ReconResult adv_recon_number(const Graph& g, bool da) {
    Profile p = profile(g, da);
    ReconResult res = base_result(p);
    if (p.full_blocked) return res;
    res.value = res.max_shared + 1;
    if (p.best_blocker >= 0) {
      const auto& row = p.counts[p.best_blocker];
      for (std::size_t i = 0; i < p.keys.size(); ++i)
        if (row[i]) res.witness.emplace_back(p.keys[i], row[i]);
    }
    return res;
  }

  ReconResult ern(const Graph& g) { return recon_number(g, false); }
  ReconResult dern(const Graph& g) { return recon_number(g, true); }
  ReconResult adv_ern(const Graph& g) { return adv_recon_number(g, false); }
  ReconResult adv_dern(const Graph& g) { return adv_recon_number(g, true); }

  /// True iff no blocker's deck contains the given sub-multiset of g's deck.
  bool is_determining(const Graph& g, bool da, const std::vector<std::pair<Card, int>>& cards) {
    Deck want;
    for (const auto& [card, mult] : cards) want.add(card, mult);
    if (!sub_multiset(want, deck_of(g, da))) throw Error("is_determining: cards are not in the deck of g");
    for (const auto& [cert, h] : blockers(g, da))
      if (sub_multiset(want, make_deck(cards_of(cert, h), da))) return false;
    return true;
  }

  const std::vector<Card>& cards_of(const Certificate& cert, const Graph& h) {
    auto it = cache_.find(cert);
    if (it == cache_.end()) it = cache_.emplace(cert, da_ecards(h)).first;
    return it->second;
  }

 private:
  struct Profile {
    std::vector<Card> keys;
    std::vector<int> mult;
    int total = 0;
    std::vector<std::vector<int>> counts;  // per blocker, capped at mult
    std::vector<Graph> graphs;
    bool full_blocked = false;
    int best_blocker = -1;
    int max_shared = 0;
  };

  Profile profile(const Graph& g, bool da) {
    if (g.size() == 0) throw Error("reconstruction numbers need at least one edge");
    Profile p;
    Deck deck = deck_of(g, da);
    for (const auto& [card, mult] : deck.entries()) {
      p.keys.push_back(card);
      p.mult.push_back(mult);
    }
    p.total = deck.total();
    for (const auto& [cert, h] : blockers(g, da)) {
      Deck hd = make_deck(cards_of(cert, h), da);
      std::vector<int> row(p.keys.size());
      int shared = 0;
      for (std::size_t i = 0; i < p.keys.size(); ++i) {
        row[i] = std::min(p.mult[i], hd.multiplicity(p.keys[i]));
        shared += row[i];
      }
      if (shared > p.max_shared) {
        p.max_shared = shared;
        p.best_blocker = static_cast<int>(p.counts.size());
      }
      if (shared == p.total) p.full_blocked = true;
      p.counts.push_back(std::move(row));
      p.graphs.push_back(h);
    }
    return p;
  }

  static ReconResult base_result(const Profile& p) {
    ReconResult r;
    r.max_shared = p.max_shared;
    if (p.best_blocker >= 0) r.blocker_example = p.graphs[p.best_blocker];
    return r;
  }

  static std::vector<std::vector<int>> maximal_rows(const std::vector<std::vector<int>>& rows) {
    auto dominated_by = [](const std::vector<int>& a, const std::vector<int>& b) {
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
      return true;
    };
    std::vector<std::vector<int>> sorted = rows;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      bool keep = true;
      for (std::size_t j = 0; j < sorted.size() && keep; ++j)
        if (i != j && dominated_by(sorted[i], sorted[j])) keep = false;
      if (keep) out.push_back(sorted[i]);
    }
    return out;
  }

  static bool blocked(const std::vector<std::vector<int>>& rows, const std::vector<int>& pick) {
    for (const auto& row : rows) {
      bool contains = true;
      for (std::size_t i = 0; i < pick.size() && contains; ++i)
        if (pick[i] > row[i]) contains = false;
      if (contains) return true;
    }
    return false;
  }

  static void enumerate(const Profile& p, const std::vector<std::vector<int>>& rows, std::vector<int>& pick, int i,
                        int left, std::optional<std::vector<std::pair<Card, int>>>& best) {
    if (left == 0) {
      if (blocked(rows, pick)) return;
      std::vector<std::pair<Card, int>> w;
      for (std::size_t j = 0; j < pick.size(); ++j)
        if (pick[j]) w.emplace_back(p.keys[j], pick[j]);
      if (!best || w < *best) best = std::move(w);
      return;
    }
    if (i == static_cast<int>(pick.size())) return;
    for (int c = std::min(left, p.mult[i]); c >= 0; --c) {
      pick[i] = c;
      enumerate(p, rows, pick, i + 1, left - c, best);
    }
    pick[i] = 0;
  }

  std::map<Certificate, std::vector<Card>> cache_;
};

inline std::map<Certificate, Graph> blockers(const Graph& g, bool da) { return Reconstructor{}.blockers(g, da); }
inline ReconResult recon_number(const Graph& g, bool da) { return Reconstructor{}.recon_number(g, da); }
inline ReconResult adv_recon_number(const Graph& g, bool da) { return Reconstructor{}.adv_recon_number(g, da); }

/// Both sides of ern(kH) <= min{adv-ern(H), 2 + mm(H)} for g = kH.
struct BoundCheck {
  Graph base;
  int copies = 0;
  ReconResult ern_g;
  ReconResult adv_ern_base;
  int mm_base = 0;
  int bound = 0;
  bool holds = false;
};

inline BoundCheck multiple_ern_bound(const Graph& g, Reconstructor& rc) {
  auto mult = as_multiple(g);
  if (!mult || mult->copies < 2) throw Error("bound check needs k >= 2 copies of one connected graph");
  if (edge_deck(mult->base).distinct() < 2)
    throw Error("bound check needs a base graph whose edge-cards are not all isomorphic");
  BoundCheck out;
  out.base = mult->base;
  out.copies = mult->copies;
  out.ern_g = rc.ern(g);
  out.adv_ern_base = rc.adv_ern(mult->base);
  out.mm_base = min_multiplicity(mult->base);
  out.bound = 2 + out.mm_base;
  if (out.adv_ern_base.value) out.bound = std::min(out.bound, *out.adv_ern_base.value);
  out.holds = out.ern_g.value && *out.ern_g.value <= out.bound;
  return out;
}

inline BoundCheck multiple_ern_bound(const Graph& g) {
  Reconstructor rc;
  return multiple_ern_bound(g, rc);
}

}  // namespace reconkit
