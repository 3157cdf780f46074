#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reconkit/canonical.hpp"
#include "reconkit/graph.hpp"

namespace reconkit {

/// An edge-card G - e, optionally carrying d(e). With the degree present it is a da-ecard.
struct Card {
  Certificate graph;
  std::optional<int> degree;

  friend bool operator==(const Card&, const Card&) = default;
  friend std::strong_ordering operator<=>(const Card&, const Card&) = default;
};

using DaEcard = Card;

/// Multiset of cards keyed by canonical form.
class Deck {
 public:
  void add(const Card& card, int count = 1) {
    if (count <= 0) return;
    entries_[card] += count;
    total_ += count;
  }

  int multiplicity(const Card& card) const {
    auto it = entries_.find(card);
    return it == entries_.end() ? 0 : it->second;
  }

  int total() const { return total_; }
  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return total_ == 0; }
  const std::map<Card, int>& entries() const { return entries_; }

  friend bool operator==(const Deck& a, const Deck& b) { return a.entries_ == b.entries_; }

 private:
  std::map<Card, int> entries_;
  int total_ = 0;
};

/// (certificate of G - e, d(e)) for every edge of g, in edge order.
inline std::vector<Card> da_ecards(const Graph& g) {
  std::vector<Card> out;
  for (const Edge& e : g.edges()) out.push_back({canonical_form(g.without_edge(e.u, e.v)), edge_degree(g, e)});
  return out;
}

/// Collapses a list of da-ecards into a deck, dropping the degrees unless `da`.
inline Deck make_deck(const std::vector<Card>& cards, bool da) {
  Deck d;
  for (const Card& c : cards) d.add(da ? c : Card{c.graph, std::nullopt});
  return d;
}

inline Deck deck_of(const Graph& g, bool da) {
  if (g.size() == 0) throw Error("deck of an edgeless graph is empty");
  return make_deck(da_ecards(g), da);
}

inline Deck edge_deck(const Graph& g) { return deck_of(g, false); }

inline Deck da_edeck(const Graph& g) { return deck_of(g, true); }

/// mm(g): the least multiplicity of an edge-card class.
inline int min_multiplicity(const Graph& g) {
  Deck d = edge_deck(g);
  int mm = d.total();
  for (const auto& [card, mult] : d.entries()) mm = std::min(mm, mult);
  return mm;
}

inline bool sub_multiset(const Deck& s, const Deck& t) {
  return std::all_of(s.entries().begin(), s.entries().end(),
                     [&](const auto& kv) { return t.multiplicity(kv.first) >= kv.second; });
}

inline int intersection_size(const Deck& s, const Deck& t) {
  int shared = 0;
  for (const auto& [card, mult] : s.entries()) shared += std::min(mult, t.multiplicity(card));
  return shared;
}

inline std::string degree_text(const std::optional<int>& d) { return d ? std::to_string(*d) : "-"; }

/// One line per key: multiplicity, d (or "-"), graph6 of the card.
inline std::string format_deck(const Deck& deck) {
  std::ostringstream out;
  for (const auto& [card, mult] : deck.entries())
    out << mult << ' ' << degree_text(card.degree) << ' ' << card.graph.canon << '\n';
  return out.str();
}

inline Deck parse_deck(const std::string& text) {
  Deck deck;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    int mult = 0;
    std::string d, g6;
    if (!(fields >> mult >> d >> g6) || mult <= 0)
      throw Error("deck line " + std::to_string(lineno) + ": expected '<mult> <d|-> <graph6>'");
    std::optional<int> degree;
    if (d != "-") {
      try {
        degree = std::stoi(d);
      } catch (const std::exception&) {
        throw Error("deck line " + std::to_string(lineno) + ": bad degree '" + d + "'");
      }
    }
    deck.add({canonical_form(parse_graph6(g6)), degree}, mult);
  }
  return deck;
}

}  // namespace reconkit
