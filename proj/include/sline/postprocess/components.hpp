#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <vector>

#include "sline/postprocess/squeeze.hpp"

namespace sline {

/// Component label per vertex: the smallest vertex ID in its component.
inline std::vector<index_t> connected_components(const CompactGraph& g) {
  constexpr index_t unset = std::numeric_limits<index_t>::max();
  std::vector<index_t> label(g.num_vertices(), unset);
  std::vector<index_t> frontier;
  for (index_t root = 0; root < g.num_vertices(); ++root) {
    if (label[root] != unset) continue;
    label[root] = root;
    frontier.assign(1, root);
    while (!frontier.empty()) {
      index_t u = frontier.back();
      frontier.pop_back();
      for (index_t v : g.neighbors(u)) {
        if (label[v] == unset) {
          label[v] = root;
          frontier.push_back(v);
        }
      }
    }
  }
  return label;
}

/// Component label -> member count, ordered by label.
inline std::map<index_t, std::size_t> component_sizes(const std::vector<index_t>& labels) {
  std::map<index_t, std::size_t> sizes;
  for (auto l : labels) ++sizes[l];
  return sizes;
}

/// Members of the largest component (ties: smallest label), ascending. Empty for an empty graph.
inline std::vector<index_t> largest_component(const std::vector<index_t>& labels) {
  auto sizes = component_sizes(labels);
  index_t best = 0;
  std::size_t best_size = 0;
  for (auto [l, n] : sizes) {
    if (n > best_size) {
      best = l;
      best_size = n;
    }
  }
  std::vector<index_t> members;
  for (index_t v = 0; v < labels.size(); ++v) {
    if (labels[v] == best && best_size > 0) members.push_back(v);
  }
  return members;
}

/// Subgraph induced by ascending `members`; member k becomes vertex k.
inline CompactGraph induced_subgraph(const CompactGraph& g, const std::vector<index_t>& members) {
  std::vector<LineEdge> edges;
  for (index_t k = 0; k < members.size(); ++k) {
    for (index_t v : g.neighbors(members[k])) {
      auto it = std::lower_bound(members.begin(), members.end(), v);
      if (it != members.end() && *it == v) {
        auto j = static_cast<index_t>(it - members.begin());
        if (k < j) edges.push_back({k, j});
      }
    }
  }
  return CompactGraph::from_edges(members.size(), edges);
}

}  // namespace sline
