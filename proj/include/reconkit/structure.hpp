#pragma once

#include <algorithm>
#include <bit>
#include <optional>
#include <vector>

#include "reconkit/canonical.hpp"
#include "reconkit/graph.hpp"

namespace reconkit {

struct Component {
  Graph graph;
  Row vertices = 0;
  Certificate certificate;

  int order() const { return graph.order(); }
};

/// Connected components, largest certificate first.
inline std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  for (Row mask : component_masks(g)) {
    Graph h = g.induced(mask);
    Certificate c = canonical_form(h);
    out.push_back({std::move(h), mask, std::move(c)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Component& a, const Component& b) { return a.certificate > b.certificate; });
  return out;
}

/// g = k copies of one connected graph H (with at least one edge): returns H and k.
struct Multiple {
  Graph base;
  int copies = 0;
};

inline std::optional<Multiple> as_multiple(const Graph& g) {
  auto comps = components(g);
  if (comps.empty() || comps.front().graph.size() == 0) return std::nullopt;
  for (const Component& c : comps)
    if (c.certificate != comps.front().certificate) return std::nullopt;
  return Multiple{comps.front().graph, static_cast<int>(comps.size())};
}

enum class CentroidKind { unicentroidal, bicentroidal };

struct CentroidInfo {
  std::vector<int> weights;
  std::vector<int> centroid;
  CentroidKind kind = CentroidKind::unicentroidal;
  std::optional<Edge> centroidal_edge;
};

/// wt(v) is the order of a largest component of T - v; the centroid is the set of minimum-weight vertices.
inline CentroidInfo centroid(const Graph& t) {
  if (!is_tree(t)) throw Error("centroid: input is not a tree");
  const int n = t.order();
  CentroidInfo info;
  info.weights.resize(n);
  for (int v = 0; v < n; ++v) {
    int w = 0;
    for (Row c : component_masks(t, low_mask(n) & ~bit(v))) w = std::max(w, std::popcount(c));
    info.weights[v] = w;
  }
  const int best = *std::min_element(info.weights.begin(), info.weights.end());
  for (int v = 0; v < n; ++v)
    if (info.weights[v] == best) info.centroid.push_back(v);
  if (info.centroid.size() == 2) {
    info.kind = CentroidKind::bicentroidal;
    info.centroidal_edge = Edge{info.centroid[0], info.centroid[1]};
  }
  return info;
}

}  // namespace reconkit
