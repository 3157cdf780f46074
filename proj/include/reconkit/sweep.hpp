#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "reconkit/canonical.hpp"
#include "reconkit/caterpillar.hpp"
#include "reconkit/deck.hpp"
#include "reconkit/families.hpp"
#include "reconkit/recon.hpp"
#include "reconkit/store.hpp"
#include "reconkit/structure.hpp"

namespace reconkit {

/// A graph in a sweep together with how it was produced.
struct Subject {
  Graph graph;
  std::string label;
  std::optional<Multiple> multiple;         // set for kH scopes
  std::optional<CaterpillarSeq> caterpillar;  // set for caterpillar scopes
};

enum class Verdict { not_applicable, holds, violated };

/// A named, versioned predicate over a sweep record.
struct Claim {
  std::string id;  // "name@version"
  std::string description;
  std::function<Verdict(const Subject&, const RunRecord&, Reconstructor&)> check;
  /// Census claims list matching records instead of looking for violations.
  std::function<bool(const RunRecord&)> census;
};

namespace detail {

inline bool at_most(const std::optional<int>& v, int bound) { return v && *v <= bound; }

inline bool edge_cards_isomorphic(const Graph& h) { return h.size() > 0 && edge_deck(h).distinct() == 1; }

inline bool is_star(const Graph& h) {
  return h.order() >= 2 && h.size() == h.order() - 1 && is_isomorphic(h, star(h.order() - 1));
}

inline Verdict verdict(bool ok) { return ok ? Verdict::holds : Verdict::violated; }

}  // namespace detail

inline const std::vector<Claim>& claims() {
  using detail::at_most;
  using detail::verdict;
  static const std::vector<Claim> all = {
      {"dern-le-2@1", "dern(G) <= 2",
       [](const Subject&, const RunRecord& r, Reconstructor&) { return verdict(at_most(r.dern, 2)); },
       nullptr},
      {"conj-5.1@1", "every tree T has dern(T) <= 2",
       [](const Subject& s, const RunRecord& r, Reconstructor&) {
         if (!is_tree(s.graph)) return Verdict::not_applicable;
         return verdict(at_most(r.dern, 2));
       },
       nullptr},
      {"cor-5.1@1", "every caterpillar T that is not a path has dern(T) <= 2",
       [](const Subject& s, const RunRecord& r, Reconstructor&) {
         if (!is_tree(s.graph)) return Verdict::not_applicable;
         auto seq = seq_of(s.graph);
         if (!seq || seq->is_path()) return Verdict::not_applicable;
         return verdict(at_most(r.dern, 2));
       },
       nullptr},
      {"ern-eq-3-census@1", "lists graphs with ern = 3",
       [](const Subject&, const RunRecord&, Reconstructor&) { return Verdict::holds; },
       [](const RunRecord& r) { return r.ern == 3; }},
      {"conj-2.1@1", "kH with ern(kH) > 3 has H a star",
       [](const Subject& s, const RunRecord& r, Reconstructor&) {
         if (!s.multiple || s.multiple->copies < 2 || s.graph.size() < 4) return Verdict::not_applicable;
         if (at_most(r.ern, 3)) return Verdict::holds;
         return verdict(detail::is_star(s.multiple->base));
       },
       nullptr},
      {"thm-4.2@1", "kH with isomorphic edge-cards of H and min degree >= 3 has dern <= 2",
       [](const Subject& s, const RunRecord& r, Reconstructor&) {
         if (!s.multiple || s.multiple->copies < 2) return Verdict::not_applicable;
         const Graph& h = s.multiple->base;
         if (!detail::edge_cards_isomorphic(h) || min_degree(h) < 3) return Verdict::not_applicable;
         return verdict(at_most(r.dern, 2));
       },
       nullptr},
      {"conj-4.1@1", "kH with isomorphic edge-cards of H, H not K13, K12 or K23, has dern <= 2",
       [](const Subject& s, const RunRecord& r, Reconstructor&) {
         if (!s.multiple || s.multiple->copies < 2) return Verdict::not_applicable;
         const Graph& h = s.multiple->base;
         if (!detail::edge_cards_isomorphic(h)) return Verdict::not_applicable;
         for (const Graph& excluded : {star(3), star(2), complete_bipartite(2, 3)})
           if (is_isomorphic(h, excluded)) return Verdict::not_applicable;
         return verdict(at_most(r.dern, 2));
       },
       nullptr},
      {"thm-4.3@1", "ern(kH) <= min{adv-ern(H), 2 + mm(H)} when H has non-isomorphic edge-cards",
       [](const Subject& s, const RunRecord& r, Reconstructor& rc) {
         if (!s.multiple || s.multiple->copies < 2) return Verdict::not_applicable;
         const Graph& h = s.multiple->base;
         if (detail::edge_cards_isomorphic(h)) return Verdict::not_applicable;
         int bound = 2 + min_multiplicity(h);
         if (auto adv = rc.adv_ern(h).value) bound = std::min(bound, *adv);
         return verdict(at_most(r.ern, bound));
       },
       nullptr},
  };
  return all;
}

/// Looks a claim up by "name@version" or by bare name (latest version).
inline const Claim& find_claim(const std::string& id) {
  const Claim* found = nullptr;
  for (const Claim& c : claims()) {
    if (c.id == id) return c;
    if (c.id.substr(0, c.id.find('@')) == id) found = &c;
  }
  if (!found) throw Error("unknown claim '" + id + "'");
  return *found;
}

// Scopes.

/// Non-isomorphic trees on exactly n vertices (n >= 2).
inline std::vector<Subject> tree_scope(int n) {
  std::vector<Subject> out;
  for (Graph& t : enumerate_trees(n)) {
    if (t.size() == 0) continue;
    Subject s{t, write_graph6(t), std::nullopt, seq_of(t)};
    out.push_back(std::move(s));
  }
  return out;
}

/// Caterpillars on exactly n vertices that are not paths.
inline std::vector<Subject> caterpillar_scope(int n) {
  std::vector<Subject> out;
  for (Subject& s : tree_scope(n))
    if (s.caterpillar && !s.caterpillar->is_path()) {
      s.label = "<" + s.caterpillar->str() + ">";
      out.push_back(std::move(s));
    }
  return out;
}

/// k copies of every connected H with 2 <= n(H) <= max_order.
inline std::vector<Subject> multiple_scope(int copies, int max_order) {
  std::vector<Subject> out;
  for (int order = 2; order <= max_order; ++order)
    for (const Graph& h : enumerate_graphs(order)) {
      if (!is_connected(h) || h.size() == 0) continue;
      Graph g = disjoint_union(copies, h);
      out.push_back({g, std::to_string(copies) + "x" + write_graph6(h), Multiple{h, copies}, std::nullopt});
    }
  return out;
}

struct SweepEntry {
  Subject subject;
  RunRecord record;
  Verdict verdict = Verdict::not_applicable;
  bool census_match = false;
  bool resumed = false;
};

struct SweepReport {
  std::string scope;
  std::string claim;
  std::vector<SweepEntry> entries;  // in scope order, one per certificate
  std::vector<std::size_t> violations;
  std::vector<std::size_t> matches;
  double elapsed_ms = 0;
};

struct SweepOptions {
  int jobs = 1;
  Store* store = nullptr;
  /// Stop after this many newly computed records (simulates an interrupted run).
  std::optional<std::size_t> limit;
};

/// Evaluates `claim` over every subject; records come from the store when present, otherwise they
/// are computed by a worker pool and appended to the store by this thread.
inline SweepReport run_sweep(std::vector<Subject> subjects, const Claim& claim, const std::string& scope,
                             const SweepOptions& opt = {}) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.scope = scope;
  report.claim = claim.id;

  // One subject per certificate.
  std::vector<std::string> keys;
  {
    std::set<std::string> seen;
    std::vector<Subject> unique;
    for (Subject& s : subjects) {
      std::string key = canonical_form(s.graph).canon;
      if (seen.insert(key).second) {
        keys.push_back(key);
        unique.push_back(std::move(s));
      }
    }
    subjects = std::move(unique);
  }

  std::map<std::string, RunRecord> stored;
  if (opt.store)
    for (RunRecord& r : opt.store->scan().records) stored.emplace(r.graph6, std::move(r));

  std::vector<std::optional<RunRecord>> results(subjects.size());
  std::vector<bool> resumed(subjects.size(), false);
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    auto it = stored.find(keys[i]);
    if (it != stored.end()) {
      results[i] = it->second;
      resumed[i] = true;
    } else if (!opt.limit || todo.size() < *opt.limit) {
      todo.push_back(i);
    }
  }

  std::mutex mutex;
  std::condition_variable ready;
  std::deque<std::size_t> finished;
  std::exception_ptr failure;
  std::atomic<std::size_t> next{0};
  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(todo.size())));
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&] {
      Reconstructor rc;
      for (std::size_t k; (k = next.fetch_add(1)) < todo.size();) {
        std::optional<RunRecord> r;
        try {
          r = analyse(subjects[todo[k]].graph, rc);
        } catch (...) {
          std::lock_guard lock(mutex);
          if (!failure) failure = std::current_exception();
        }
        std::lock_guard lock(mutex);
        results[todo[k]] = std::move(r);
        finished.push_back(todo[k]);
        ready.notify_one();
      }
    });
  for (std::size_t written = 0; written < todo.size(); ++written) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return !finished.empty(); });
    std::size_t i = finished.front();
    finished.pop_front();
    std::optional<RunRecord> r = results[i];
    lock.unlock();
    if (opt.store && r) opt.store->append(*r);
  }
  for (std::thread& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);

  Reconstructor rc;
  for (std::size_t i = 0; i < subjects.size(); ++i) {
    if (!results[i]) continue;
    SweepEntry e{std::move(subjects[i]), std::move(*results[i]), Verdict::not_applicable, false, resumed[i]};
    e.verdict = claim.check(e.subject, e.record, rc);
    e.census_match = claim.census && claim.census(e.record);
    if (e.verdict == Verdict::violated) report.violations.push_back(report.entries.size());
    if (e.census_match) report.matches.push_back(report.entries.size());
    report.entries.push_back(std::move(e));
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace reconkit
