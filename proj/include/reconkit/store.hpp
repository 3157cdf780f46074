#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "reconkit/canonical.hpp"
#include "reconkit/recon.hpp"

namespace reconkit {

/// One analysed graph: the four reconstruction numbers and the dern witness.
struct RunRecord {
  std::string graph6;  // canonical
  int n = 0;
  int m = 0;
  std::optional<int> ern;
  std::optional<int> dern;
  std::optional<int> adv_ern;
  std::optional<int> adv_dern;
  std::vector<std::string> witness;  // "mult×d×graph6"
  double elapsed_ms = 0;
  bool duplicate = false;

  /// Equality on everything except timing and the duplicate flag.
  bool same_result(const RunRecord& o) const {
    return graph6 == o.graph6 && n == o.n && m == o.m && ern == o.ern && dern == o.dern && adv_ern == o.adv_ern &&
           adv_dern == o.adv_dern && witness == o.witness;
  }
};

inline std::string witness_item(const Card& card, int mult) {
  return std::to_string(mult) + "×" + degree_text(card.degree) + "×" + card.graph.canon;
}

inline RunRecord analyse(const Graph& g, Reconstructor& rc) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord r;
  const Certificate cert = canonical_form(g);
  r.graph6 = cert.canon;
  r.n = cert.n;
  r.m = cert.m;
  r.ern = rc.ern(g).value;
  ReconResult d = rc.dern(g);
  r.dern = d.value;
  for (const auto& [card, mult] : d.witness) r.witness.push_back(witness_item(card, mult));
  r.adv_ern = rc.adv_ern(g).value;
  r.adv_dern = rc.adv_dern(g).value;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::string value_text(const std::optional<int>& v) { return v ? std::to_string(*v) : "indeterminate"; }

namespace detail {

inline nlohmann::json value_json(const std::optional<int>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json("indeterminate");
}

inline std::optional<int> value_from(const nlohmann::json& j) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string() && j.get<std::string>() == "indeterminate") return std::nullopt;
  throw Error("store: bad reconstruction value");
}

}  // namespace detail

inline std::string to_line(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["ern"] = detail::value_json(r.ern);
  j["dern"] = detail::value_json(r.dern);
  j["adv_ern"] = detail::value_json(r.adv_ern);
  j["adv_dern"] = detail::value_json(r.adv_dern);
  j["witness"] = r.witness;
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.duplicate) j["duplicate"] = true;
  return j.dump();
}

inline RunRecord from_line(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
    RunRecord r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.ern = detail::value_from(j.at("ern"));
    r.dern = detail::value_from(j.at("dern"));
    r.adv_ern = detail::value_from(j.at("adv_ern"));
    r.adv_dern = detail::value_from(j.at("adv_dern"));
    r.witness = j.at("witness").get<std::vector<std::string>>();
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    r.duplicate = j.value("duplicate", false);
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("store: ") + e.what());
  }
}

/// "field op value", e.g. "dern>=3". Fields: n, m, ern, dern, adv_ern (adv-ern), adv_dern (adv-dern).
/// Indeterminate compares as larger than every integer.
class RecordFilter {
 public:
  RecordFilter() = default;

  explicit RecordFilter(const std::string& expr) {
    if (expr.empty()) return;
    static const char* ops[] = {">=", "<=", "!=", "==", ">", "<", "="};
    for (const char* op : ops) {
      auto pos = expr.find(op);
      if (pos == std::string::npos) continue;
      field_ = expr.substr(0, pos);
      op_ = op;
      std::string rhs = expr.substr(pos + op_.size());
      for (char& c : field_)
        if (c == '-') c = '_';
      if (rhs == "indeterminate") {
        rhs_ = kInfinite;
      } else {
        try {
          std::size_t used = 0;
          rhs_ = std::stol(rhs, &used);
          if (used != rhs.size()) throw Error("");
        } catch (const std::exception&) {
          throw Error("filter: bad value '" + rhs + "'");
        }
      }
      static const std::set<std::string> fields{"n", "m", "ern", "dern", "adv_ern", "adv_dern"};
      if (!fields.count(field_)) throw Error("filter: unknown field '" + field_ + "'");
      active_ = true;
      return;
    }
    throw Error("filter: expected 'field op value' in '" + expr + "'");
  }

  bool operator()(const RunRecord& r) const {
    if (!active_) return true;
    const long lhs = field_value(r);
    if (op_ == ">=") return lhs >= rhs_;
    if (op_ == "<=") return lhs <= rhs_;
    if (op_ == ">") return lhs > rhs_;
    if (op_ == "<") return lhs < rhs_;
    if (op_ == "!=") return lhs != rhs_;
    return lhs == rhs_;
  }

 private:
  static constexpr long kInfinite = std::numeric_limits<long>::max();

  long field_value(const RunRecord& r) const {
    auto v = [](const std::optional<int>& x) { return x ? static_cast<long>(*x) : kInfinite; };
    if (field_ == "n") return r.n;
    if (field_ == "m") return r.m;
    if (field_ == "ern") return v(r.ern);
    if (field_ == "dern") return v(r.dern);
    if (field_ == "adv_ern") return v(r.adv_ern);
    return v(r.adv_dern);
  }

  bool active_ = false;
  std::string field_;
  std::string op_;
  long rhs_ = 0;
};

/// Append-only line-delimited store of RunRecords. Appends are serialised; a reader sees every
/// complete line written before it opened the file.
class Store {
 public:
  struct Scan {
    std::vector<RunRecord> records;  // deduplicated by graph6, last write wins, first-seen order
    int corrupt = 0;
    int duplicates = 0;
  };

  explicit Store(std::filesystem::path path) : path_(std::move(path)) {
    for (const RunRecord& r : scan().records) known_.insert(r.graph6);
  }

  const std::filesystem::path& path() const { return path_; }

  bool contains(const std::string& graph6) const {
    std::lock_guard lock(mutex_);
    return known_.count(graph6) > 0;
  }

  /// Appends the record; returns true (and flags the line) when its certificate was already stored.
  bool append(RunRecord record) {
    std::lock_guard lock(mutex_);
    record.duplicate = !known_.insert(record.graph6).second;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw Error("store: cannot open " + path_.string() + " for append");
    out << to_line(record) << '\n';
    out.flush();
    return record.duplicate;
  }

  Scan scan(const RecordFilter& filter = {}) const {
    Scan result;
    std::ifstream in(path_);
    if (!in) return result;
    std::map<std::string, std::size_t> index;
    std::vector<RunRecord> ordered;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      RunRecord r;
      try {
        r = from_line(line);
      } catch (const Error&) {
        ++result.corrupt;
        continue;
      }
      auto [it, fresh] = index.try_emplace(r.graph6, ordered.size());
      if (fresh) {
        ordered.push_back(std::move(r));
      } else {
        ++result.duplicates;
        ordered[it->second] = std::move(r);
      }
    }
    for (RunRecord& r : ordered)
      if (filter(r)) result.records.push_back(std::move(r));
    return result;
  }

  std::optional<RunRecord> find(const std::string& graph6) const {
    for (RunRecord& r : scan().records)
      if (r.graph6 == graph6) return r;
    return std::nullopt;
  }

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::set<std::string> known_;
};

}  // namespace reconkit
