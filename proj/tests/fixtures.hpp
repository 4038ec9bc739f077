#pragma once

// Test fixtures and brute-force oracles. The oracles deliberately use only
// the standard library (std::set_intersection, std::set) so they stay
// independent of the kernels they check.

#include <algorithm>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sline/sline.hpp"

namespace sline::test {

inline constexpr index_t A = 0, B = 1, C = 2, D = 3;

/// The four-edge example: A={1..4}, B={3..10}, C={8..11}, D={10,12}, vertex k stored as k-1.
inline Hypergraph toy_hypergraph() {
  auto shift = [](std::vector<index_t> vs) {
    for (auto& v : vs) --v;
    return vs;
  };
  return Hypergraph::from_edge_lists({shift({1, 2, 3, 4}), shift({3, 4, 5, 6, 7, 8, 9, 10}), shift({8, 9, 10, 11}),
                                      shift({10, 12})},
                                     12);
}

inline std::string toy_path() { return std::string(SLINE_TEST_DATA_DIR) + "/toy.tsv"; }

inline std::vector<LineEdge> pairs_of(std::initializer_list<std::pair<index_t, index_t>> list) {
  std::vector<LineEdge> out;
  for (auto [u, v] : list) out.push_back({u, v});
  return out;
}

inline std::size_t oracle_intersection(const Hypergraph& h, index_t i, index_t j) {
  std::vector<index_t> common;
  std::set_intersection(h.edge(i).begin(), h.edge(i).end(), h.edge(j).begin(), h.edge(j).end(),
                        std::back_inserter(common));
  return common.size();
}

/// All pairs i < j with |e_i ∩ e_j| >= s, by exhaustive enumeration.
inline std::vector<LineEdge> oracle_pairs(const Hypergraph& h, std::size_t s) {
  std::vector<LineEdge> out;
  for (index_t i = 0; i < h.num_edges(); ++i)
    for (index_t j = i + 1; j < h.num_edges(); ++j)
      if (oracle_intersection(h, i, j) >= s) out.push_back({i, j});
  return out;
}

/// Random hypergraph with n, m <= max_dim and a random incidence density.
template <class Rng>
Hypergraph random_hypergraph(Rng& rng, std::size_t max_dim = 64) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_real_distribution<double> dens(0.02, 0.45);
  return generate::bernoulli(rng, dim(rng), dim(rng), dens(rng));
}

/// Components by brute-force transitive closure (Floyd-Warshall reachability).
inline std::vector<std::set<index_t>> oracle_components(const CompactGraph& g) {
  const auto n = g.num_vertices();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (index_t u = 0; u < n; ++u) {
    reach[u][u] = true;
    for (index_t v : g.neighbors(u)) reach[u][v] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::set<std::set<index_t>> classes;
  for (index_t i = 0; i < n; ++i) {
    std::set<index_t> cls;
    for (index_t j = 0; j < n; ++j)
      if (reach[i][j]) cls.insert(j);
    classes.insert(cls);
  }
  return {classes.begin(), classes.end()};
}

/**
 * Two dense clusters joined by one bridging hyperedge. Every hyperedge holds
 * hub vertex 0, so L_1 is complete. Cluster hyperedges share 11 vertices
 * inside their cluster; the bridge shares 5 with one member of each cluster.
 * L_2..L_5 is a dumbbell, L_6..L_11 two disjoint cliques (sizes 6 and 5).
 */
inline Hypergraph two_cluster_hypergraph() {
  std::vector<std::vector<index_t>> edges;
  index_t next_private = 100;
  auto core = [](index_t first) {
    std::vector<index_t> vs;
    for (index_t v = first; v < first + 10; ++v) vs.push_back(v);
    return vs;
  };
  const std::vector<index_t> left_bridge = {30, 31, 32, 33};
  const std::vector<index_t> right_bridge = {40, 41, 42, 43};
  for (int k = 0; k < 6; ++k) {
    auto e = core(1);
    e.push_back(0);
    e.push_back(next_private++);
    if (k == 0) e.insert(e.end(), left_bridge.begin(), left_bridge.end());
    edges.push_back(e);
  }
  for (int k = 0; k < 5; ++k) {
    auto e = core(11);
    e.push_back(0);
    e.push_back(next_private++);
    if (k == 0) e.insert(e.end(), right_bridge.begin(), right_bridge.end());
    edges.push_back(e);
  }
  std::vector<index_t> bridge = {0};
  bridge.insert(bridge.end(), left_bridge.begin(), left_bridge.end());
  bridge.insert(bridge.end(), right_bridge.begin(), right_bridge.end());
  edges.push_back(bridge);
  return Hypergraph::from_edge_lists(edges, 200);
}

}  // namespace sline::test
