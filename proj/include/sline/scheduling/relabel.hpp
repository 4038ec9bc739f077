#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sline/core/hypergraph.hpp"
#include "sline/overlap/types.hpp"

namespace sline {

enum class RelabelOrder { ascending, descending };

inline const char* to_string(RelabelOrder o) { return o == RelabelOrder::ascending ? "asc" : "desc"; }

/// Permutation of hyperedge IDs. forward[old] = new, backward[new] = old.
struct RelabelMap {
  std::vector<index_t> forward;
  std::vector<index_t> backward;
  RelabelOrder order = RelabelOrder::ascending;
};

/**
 * Renumbers hyperedges so their sizes are monotone in `order`, ties broken by
 * ascending original ID. Vertex IDs are untouched; vertex incidence lists are
 * rewritten and re-sorted. Edge labels follow their hyperedges.
 */
inline std::pair<Hypergraph, RelabelMap> relabel_by_degree(const Hypergraph& h,
                                                           RelabelOrder order = RelabelOrder::ascending) {
  const auto m = h.num_edges();
  RelabelMap map;
  map.order = order;
  map.backward.resize(m);
  std::iota(map.backward.begin(), map.backward.end(), index_t{0});
  std::stable_sort(map.backward.begin(), map.backward.end(), [&](index_t a, index_t b) {
    return order == RelabelOrder::ascending ? h.edge_size(a) < h.edge_size(b) : h.edge_size(a) > h.edge_size(b);
  });
  map.forward.resize(m);
  for (index_t fresh = 0; fresh < m; ++fresh) map.forward[map.backward[fresh]] = fresh;

  std::vector<std::pair<index_t, index_t>> pairs;
  pairs.reserve(h.num_incidences());
  for (index_t old = 0; old < m; ++old) {
    for (index_t v : h.edge(old)) pairs.emplace_back(map.forward[old], v);
  }
  auto out = Hypergraph::from_incidences(std::move(pairs), h.num_vertices(), m);

  const bool identity = std::is_sorted(map.backward.begin(), map.backward.end());
  std::vector<label_t> labels;
  if (!h.edge_labels().empty() || !identity) {
    labels.resize(m);
    for (index_t fresh = 0; fresh < m; ++fresh) labels[fresh] = h.edge_label(map.backward[fresh]);
  }
  out.set_labels(std::move(labels), h.vertex_labels());
  return {std::move(out), std::move(map)};
}

/// Rewrites an edge list computed on a relabeled hypergraph into the original IDs.
inline SLineEdgeList map_back(const SLineEdgeList& edges, const RelabelMap& map) {
  SLineEdgeList out;
  out.s = edges.s;
  out.weighted = edges.weighted;
  out.weights = edges.weights;
  out.pairs.reserve(edges.pairs.size());
  for (auto [u, v] : edges.pairs) {
    index_t a = map.backward.at(u);
    index_t b = map.backward.at(v);
    if (a > b) std::swap(a, b);
    out.pairs.push_back({a, b});
  }
  out.canonicalize();
  return out;
}

}  // namespace sline
