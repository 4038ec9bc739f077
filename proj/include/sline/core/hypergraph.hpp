#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sline/core/csr.hpp"

namespace sline {

/**
 * A hypergraph stored as both incidence views of its bipartite representation:
 * hyperedge -> member vertices and vertex -> incident hyperedges.
 *
 * Every list is strictly ascending. Empty hyperedges and isolated vertices are
 * allowed. Optional label vectors record the IDs the input file used when they
 * had to be compacted; an empty label vector means the dense ID is the label.
 *
 * Instances are immutable once built and may be shared read-only across threads.
 */
class Hypergraph {
public:
  using incidence_type = csr_adjacency<index_t>;

  Hypergraph() = default;

  /// Builds from (edge, vertex) incidence pairs; duplicate pairs collapse.
  static Hypergraph from_incidences(std::vector<std::pair<index_t, index_t>> edge_vertex_pairs,
                                    std::size_t num_vertices, std::size_t num_edges) {
    for (auto [e, v] : edge_vertex_pairs) {
      if (e >= num_edges) throw std::out_of_range("hypergraph: edge id out of range");
      if (v >= num_vertices) throw std::out_of_range("hypergraph: vertex id out of range");
    }
    Hypergraph h;
    h.edges_ = incidence_type::from_pairs(std::move(edge_vertex_pairs), num_edges);
    h.vertices_ = h.edges_.transpose(num_vertices);
    return h;
  }

  /// Builds from one vertex list per hyperedge. Lists need not be sorted.
  static Hypergraph from_edge_lists(const std::vector<std::vector<index_t>>& edges,
                                    std::size_t num_vertices) {
    std::vector<std::pair<index_t, index_t>> pairs;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      for (index_t v : edges[e]) pairs.emplace_back(static_cast<index_t>(e), v);
    }
    return from_incidences(std::move(pairs), num_vertices, edges.size());
  }

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::size_t num_incidences() const noexcept { return edges_.num_entries(); }

  /// Member vertices of hyperedge `e`.
  std::span<const index_t> edge(index_t e) const noexcept { return edges_[e]; }
  /// Hyperedges incident to vertex `v`.
  std::span<const index_t> vertex(index_t v) const noexcept { return vertices_[v]; }

  std::size_t edge_size(index_t e) const noexcept { return edges_.degree(e); }
  std::size_t vertex_degree(index_t v) const noexcept { return vertices_.degree(v); }

  const incidence_type& edge_incidence() const noexcept { return edges_; }
  const incidence_type& vertex_incidence() const noexcept { return vertices_; }

  const std::vector<label_t>& edge_labels() const noexcept { return edge_labels_; }
  const std::vector<label_t>& vertex_labels() const noexcept { return vertex_labels_; }

  label_t edge_label(index_t e) const noexcept { return edge_labels_.empty() ? e : edge_labels_[e]; }
  label_t vertex_label(index_t v) const noexcept { return vertex_labels_.empty() ? v : vertex_labels_[v]; }

  void set_labels(std::vector<label_t> edge_labels, std::vector<label_t> vertex_labels) {
    if (!edge_labels.empty() && edge_labels.size() != num_edges())
      throw std::invalid_argument("hypergraph: edge label count mismatch");
    if (!vertex_labels.empty() && vertex_labels.size() != num_vertices())
      throw std::invalid_argument("hypergraph: vertex label count mismatch");
    edge_labels_ = std::move(edge_labels);
    vertex_labels_ = std::move(vertex_labels);
  }

  bool operator==(const Hypergraph&) const = default;

  friend Hypergraph dual(const Hypergraph& h) {
    Hypergraph d;
    d.edges_ = h.vertices_;
    d.vertices_ = h.edges_;
    d.edge_labels_ = h.vertex_labels_;
    d.vertex_labels_ = h.edge_labels_;
    return d;
  }

private:
  incidence_type edges_;
  incidence_type vertices_;
  std::vector<label_t> edge_labels_;
  std::vector<label_t> vertex_labels_;
};

/// Swaps the roles of vertices and hyperedges. dual(dual(h)) == h.
Hypergraph dual(const Hypergraph& h);

struct DegreeStats {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  double avg_edge_size = 0.0;
  std::size_t max_vertex_degree = 0;
  std::size_t max_edge_size = 0;
  std::map<std::size_t, std::size_t> edge_size_histogram;
};

inline DegreeStats degree_stats(const Hypergraph& h) {
  DegreeStats st;
  st.num_vertices = h.num_vertices();
  st.num_edges = h.num_edges();
  for (index_t e = 0; e < h.num_edges(); ++e) {
    auto k = h.edge_size(e);
    st.max_edge_size = std::max(st.max_edge_size, k);
    ++st.edge_size_histogram[k];
  }
  for (index_t v = 0; v < h.num_vertices(); ++v) {
    st.max_vertex_degree = std::max(st.max_vertex_degree, h.vertex_degree(v));
  }
  if (h.num_edges() > 0) {
    st.avg_edge_size = static_cast<double>(h.num_incidences()) / static_cast<double>(h.num_edges());
  }
  return st;
}

}  // namespace sline
