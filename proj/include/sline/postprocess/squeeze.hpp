#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "sline/core/csr.hpp"
#include "sline/overlap/types.hpp"

namespace sline {

/// Simple undirected graph on compact IDs 0..num_vertices()-1 with sorted, symmetric adjacency.
class CompactGraph {
public:
  CompactGraph() = default;

  static CompactGraph from_edges(std::size_t num_vertices, const std::vector<LineEdge>& edges) {
    std::vector<std::pair<index_t, index_t>> arcs;
    arcs.reserve(2 * edges.size());
    for (auto [u, v] : edges) {
      if (u == v) continue;
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
    }
    CompactGraph g;
    g.adj_ = csr_adjacency<index_t>::from_pairs(std::move(arcs), num_vertices);
    return g;
  }

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return adj_.num_entries() / 2; }
  std::span<const index_t> neighbors(index_t v) const noexcept { return adj_[v]; }
  std::size_t degree(index_t v) const noexcept { return adj_.degree(v); }

  /// Each undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<LineEdge> edges() const {
    std::vector<LineEdge> out;
    out.reserve(num_edges());
    for (index_t u = 0; u < num_vertices(); ++u) {
      for (index_t v : neighbors(u)) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  bool operator==(const CompactGraph&) const = default;

private:
  csr_adjacency<index_t> adj_;
};

/// Bijection between the hyperedge IDs that survive in an s-line graph and 0..size()-1.
struct IdMap {
  std::vector<index_t> to_original;  // ascending

  std::size_t size() const noexcept { return to_original.size(); }
  index_t original(index_t compact) const { return to_original.at(compact); }

  std::optional<index_t> to_compact(index_t original) const {
    auto it = std::lower_bound(to_original.begin(), to_original.end(), original);
    if (it == to_original.end() || *it != original) return std::nullopt;
    return static_cast<index_t>(it - to_original.begin());
  }
};

/**
 * Renumbers the hyperedges present in `edges` to contiguous IDs, preserving
 * their relative order, and builds the compact line graph over them.
 */
inline std::pair<CompactGraph, IdMap> squeeze(const SLineEdgeList& edges) {
  IdMap map;
  map.to_original.reserve(2 * edges.size());
  for (auto [u, v] : edges.pairs) {
    map.to_original.push_back(u);
    map.to_original.push_back(v);
  }
  std::sort(map.to_original.begin(), map.to_original.end());
  map.to_original.erase(std::unique(map.to_original.begin(), map.to_original.end()), map.to_original.end());

  std::vector<LineEdge> compact;
  compact.reserve(edges.size());
  for (auto [u, v] : edges.pairs) compact.push_back({*map.to_compact(u), *map.to_compact(v)});
  return {CompactGraph::from_edges(map.size(), compact), std::move(map)};
}

/// Inverse of squeeze(): the canonical edge list in original IDs.
inline SLineEdgeList unsqueeze(const CompactGraph& g, const IdMap& map, std::size_t s = 1) {
  SLineEdgeList out;
  out.s = s;
  for (auto [u, v] : g.edges()) out.pairs.push_back({map.original(u), map.original(v)});
  return out;
}

}  // namespace sline
