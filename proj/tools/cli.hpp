#pragma once

#include <cstdlib>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reconkit/reconkit.hpp"

namespace reconkit::cli {

inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kViolation = 2;

inline void print_witness(std::ostream& out, const std::string& label,
                          const std::vector<std::pair<Card, int>>& cards) {
  out << label;
  if (cards.empty()) out << " (none)";
  for (const auto& [card, mult] : cards) out << ' ' << witness_item(card, mult);
  out << '\n';
}

inline void print_result(std::ostream& out, const std::string& name, const ReconResult& r) {
  out << name << ' ' << value_text(r.value) << '\n';
  print_witness(out, "  witness", r.witness);
  out << "  max_shared " << r.max_shared << '\n';
  if (r.blocker_example) out << "  blocker " << canonical_form(*r.blocker_example).canon << '\n';
}

inline int cmd_deck(const std::string& input, bool da, std::ostream& out) {
  const Graph g = parse_graph_input(input);
  const Deck deck = deck_of(g, da);
  out << "# " << (da ? "da-edeck" : "edge-deck") << ' ' << write_graph6(g) << " n=" << g.order()
      << " m=" << g.size() << " distinct=" << deck.distinct() << '\n';
  out << format_deck(deck);
  return kOk;
}

inline int cmd_recon(const std::string& input, const std::string& which, std::ostream& out) {
  const Graph g = parse_graph_input(input);
  Reconstructor rc;
  const bool all = which == "all";
  if (all || which == "ern") print_result(out, "ern", rc.ern(g));
  if (all || which == "dern") print_result(out, "dern", rc.dern(g));
  if (all || which == "adv-ern") print_result(out, "adv-ern", rc.adv_ern(g));
  if (all || which == "adv-dern") print_result(out, "adv-dern", rc.adv_dern(g));
  return kOk;
}

inline int cmd_adv(const std::string& input, bool da, std::ostream& out) {
  const Graph g = parse_graph_input(input);
  Reconstructor rc;
  print_result(out, da ? "adv-dern" : "adv-ern", rc.adv_recon_number(g, da));
  for (const auto& [cert, h] : rc.blockers(g, da))
    out << "  blocker " << cert.canon << " shares " << intersection_size(deck_of(g, da), deck_of(h, da)) << '\n';
  return kOk;
}

struct SweepArgs {
  std::optional<int> trees;
  std::optional<int> caterpillars;
  bool disconnected = false;
  int copies = 2;
  int max_order = 5;
  std::string claim;
  std::string store;
  bool force = false;
  int jobs = 1;
};

inline int cmd_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  const int chosen = (a.trees ? 1 : 0) + (a.caterpillars ? 1 : 0) + (a.disconnected ? 1 : 0);
  if (chosen != 1) throw Error("sweep: choose exactly one of --trees, --caterpillars, --disconnected");
  const Claim& claim = find_claim(a.claim);

  auto cap = [&](bool within, const std::string& what) {
    if (within) return;
    if (!a.force) throw Error("sweep: " + what + " exceeds the default cap (use --force)");
    err << "warning: " << what << " exceeds the default cap\n";
  };

  std::vector<Subject> subjects;
  std::string scope;
  if (a.trees) {
    cap(*a.trees <= 10, "trees n=" + std::to_string(*a.trees));
    subjects = tree_scope(*a.trees);
    scope = "trees:" + std::to_string(*a.trees);
  } else if (a.caterpillars) {
    cap(*a.caterpillars <= 10, "caterpillars n=" + std::to_string(*a.caterpillars));
    subjects = caterpillar_scope(*a.caterpillars);
    scope = "caterpillars:" + std::to_string(*a.caterpillars);
  } else {
    if (a.copies < 1 || a.max_order < 2) throw Error("sweep: need --copies >= 1 and --max-order >= 2");
    cap(a.copies * a.max_order <= 10, std::to_string(a.copies) + "H with n(H)<=" + std::to_string(a.max_order));
    subjects = multiple_scope(a.copies, a.max_order);
    scope = "disconnected:" + std::to_string(a.copies) + "H,n(H)<=" + std::to_string(a.max_order);
  }

  std::optional<Store> store;
  std::string path = a.store;
  if (path.empty())
    if (const char* env = std::getenv("RECONKIT_STORE")) path = env;
  if (!path.empty()) store.emplace(path);

  SweepOptions opt;
  opt.jobs = a.jobs;
  opt.store = store ? &*store : nullptr;
  const SweepReport report = run_sweep(std::move(subjects), claim, scope, opt);

  out << "# scope " << report.scope << " claim " << report.claim << '\n';
  out << "# label graph6 ern dern adv-ern adv-dern verdict\n";
  for (const SweepEntry& e : report.entries) {
    const RunRecord& r = e.record;
    const char* verdict = e.verdict == Verdict::violated ? "VIOLATED" : e.verdict == Verdict::holds ? "ok" : "n/a";
    out << e.subject.label << ' ' << r.graph6 << ' ' << value_text(r.ern) << ' ' << value_text(r.dern) << ' '
        << value_text(r.adv_ern) << ' ' << value_text(r.adv_dern) << ' ' << verdict << (e.resumed ? " (stored)" : "")
        << '\n';
  }
  for (std::size_t i : report.matches) out << "match " << report.entries[i].subject.label << '\n';
  for (std::size_t i : report.violations) {
    const SweepEntry& e = report.entries[i];
    out << "violation " << e.subject.label << " witness";
    for (const std::string& w : e.record.witness) out << ' ' << w;
    out << '\n';
  }
  out << "records " << report.entries.size() << " violations " << report.violations.size() << " matches "
      << report.matches.size() << " elapsed_ms " << static_cast<long>(report.elapsed_ms) << '\n';
  return report.violations.empty() ? kOk : kViolation;
}

inline void print_set(std::ostream& out, const std::set<CaterpillarSeq>& got) {
  out << got.size() << (got.size() == 1 ? " candidate" : " candidates") << '\n';
  for (const CaterpillarSeq& s : got) out << "<" << s.str() << ">\n";
}

inline int cmd_cat_reconstruct(const std::string& r1, const std::string& r2, std::optional<int> d1,
                               std::optional<int> d2, std::ostream& out) {
  if (d1.has_value() != d2.has_value()) throw Error("caterpillar reconstruct: give both degrees or neither");
  const CaterpillarSeq a = CaterpillarSeq::parse(r1), b = CaterpillarSeq::parse(r2);
  if (d1)
    print_set(out, reconstruct(Reduction{a, *d1, 0}, Reduction{b, *d2, 0}));
  else
    print_set(out, reconstruct(a, b));
  return kOk;
}

inline int cmd_cat_pair(const std::string& text, std::ostream& out) {
  const CaterpillarSeq s = CaterpillarSeq::parse(text);
  const auto [i, j] = identifying_pair(s);
  const Reduction ri = reduce_at(s, i), rj = reduce_at(s, j);
  out << "pair " << i << ' ' << j << '\n';
  out << "  <" << ri.seq.str() << "> d=" << ri.degree << '\n';
  out << "  <" << rj.seq.str() << "> d=" << rj.degree << '\n';
  return kOk;
}

inline int cmd_cat_reductions(const std::string& text, std::ostream& out) {
  const CaterpillarSeq s = CaterpillarSeq::parse(text);
  for (const Reduction& r : reductions(s))
    out << r.position << " <" << r.seq.str() << "> d=" << r.degree << " x" << s.at(r.position) << '\n';
  return kOk;
}

inline int cmd_family_gen(const std::string& spec, std::ostream& out) {
  const Graph g = parse_family(spec);
  out << write_graph6(canonical_graph(g)) << '\n';
  return kOk;
}

inline int cmd_family_list(const std::string& kind, int n, std::optional<int> m, std::ostream& out) {
  std::vector<Graph> graphs;
  if (kind == "trees")
    graphs = enumerate_trees(n);
  else if (kind == "graphs")
    graphs = enumerate_graphs(n, m);
  else
    throw Error("family list: kind must be 'trees' or 'graphs'");
  for (const Graph& g : graphs) out << write_graph6(g) << '\n';
  return kOk;
}

inline int cmd_store_scan(const std::string& path_arg, const std::string& filter, std::ostream& out,
                          std::ostream& err) {
  std::string path = path_arg;
  if (path.empty())
    if (const char* env = std::getenv("RECONKIT_STORE")) path = env;
  if (path.empty()) throw Error("store: no path (use --store or RECONKIT_STORE)");
  const Store store(path);
  const Store::Scan scan = store.scan(RecordFilter(filter));
  if (scan.corrupt) err << "warning: skipped " << scan.corrupt << " corrupt line(s)\n";
  if (scan.duplicates) err << "note: " << scan.duplicates << " duplicate certificate line(s) collapsed\n";
  for (const RunRecord& r : scan.records) out << to_line(r) << '\n';
  return kOk;
}

/// Parses argv and runs one subcommand; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Edge and degree-associated edge reconstruction numbers of small graphs", "reconkit"};
  app.require_subcommand(1);
  int code = kOk;

  std::string input;
  bool da = false;
  auto* deck = app.add_subcommand("deck", "print the edge-deck or da-edeck");
  deck->add_option("graph", input, "graph6 or family spec (P:n, S:n, K:n, Kpq:p,q, C:n, U:k*spec, cat:..., spider:...)")
      ->required();
  deck->add_flag("--da", da, "degree-associated cards");
  deck->callback([&] { code = cmd_deck(input, da, out); });

  std::string which = "all";
  auto* recon = app.add_subcommand("recon", "reconstruction numbers with witness");
  recon->add_option("graph", input)->required();
  recon->add_option("--which", which)->check(CLI::IsMember({"ern", "dern", "adv-ern", "adv-dern", "all"}));
  recon->callback([&] { code = cmd_recon(input, which, out); });

  auto* adv = app.add_subcommand("adv", "adversary number and every blocker with its shared count");
  adv->add_option("graph", input)->required();
  adv->add_flag("--da", da);
  adv->callback([&] { code = cmd_adv(input, da, out); });

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "evaluate a claim over a family");
  sweep->add_option("--trees", sweep_args.trees, "all trees on n vertices");
  sweep->add_option("--caterpillars", sweep_args.caterpillars, "non-path caterpillars on n vertices");
  sweep->add_flag("--disconnected", sweep_args.disconnected, "kH for connected H");
  sweep->add_option("--copies", sweep_args.copies, "k for --disconnected")->capture_default_str();
  sweep->add_option("--max-order", sweep_args.max_order, "largest n(H) for --disconnected")->capture_default_str();
  sweep->add_option("--claim", sweep_args.claim, "claim id, e.g. dern-le-2 or conj-2.1@1")->required();
  sweep->add_option("--store", sweep_args.store, "result store (default: $RECONKIT_STORE)");
  sweep->add_flag("--force", sweep_args.force, "allow scopes beyond the default caps");
  sweep->add_option("--jobs,-j", sweep_args.jobs)->check(CLI::PositiveNumber);
  sweep->callback([&] { code = cmd_sweep(sweep_args, out, err); });

  auto* cat = app.add_subcommand("caterpillar", "caterpillar sequence tools");
  cat->require_subcommand(1);
  std::string s1, s2;
  std::optional<int> d1, d2;
  auto* rec = cat->add_subcommand("reconstruct", "sequences having both reductions");
  rec->add_option("r1", s1)->required();
  rec->add_option("r2", s2)->required();
  rec->add_option("--d1", d1, "degree of the first deleted edge");
  rec->add_option("--d2", d2, "degree of the second deleted edge");
  rec->callback([&] { code = cmd_cat_reconstruct(s1, s2, d1, d2, out); });
  auto* pair = cat->add_subcommand("pair", "two end-edges whose da-ecards identify the sequence");
  pair->add_option("seq", s1)->required();
  pair->callback([&] { code = cmd_cat_pair(s1, out); });
  auto* reds = cat->add_subcommand("reductions", "spine-preserving reductions");
  reds->add_option("seq", s1)->required();
  reds->callback([&] { code = cmd_cat_reductions(s1, out); });

  auto* family = app.add_subcommand("family", "graph families");
  family->require_subcommand(1);
  std::string spec;
  auto* gen = family->add_subcommand("gen", "graph6 of a family spec");
  gen->add_option("spec", spec)->required();
  gen->callback([&] { code = cmd_family_gen(spec, out); });
  std::string kind;
  int n = 0;
  std::optional<int> m;
  auto* list = family->add_subcommand("list", "one graph per isomorphism class");
  list->add_option("kind", kind, "trees or graphs")->required();
  list->add_option("n", n)->required();
  list->add_option("--edges,-m", m);
  list->callback([&] { code = cmd_family_list(kind, n, m, out); });

  auto* store = app.add_subcommand("store", "result store");
  store->require_subcommand(1);
  std::string store_path, filter;
  auto* scan = store->add_subcommand("scan", "print stored records");
  scan->add_option("--store", store_path, "store file (default: $RECONKIT_STORE)");
  scan->add_option("--filter", filter, "e.g. dern>=3");
  scan->callback([&] { code = cmd_store_scan(store_path, filter, out, err); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return code;
}

}  // namespace reconkit::cli
