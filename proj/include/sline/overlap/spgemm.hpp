#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "sline/core/hypergraph.hpp"
#include "sline/overlap/types.hpp"

namespace sline {

/// Row-major sparse product with integer entries.
struct CountMatrix {
  std::vector<std::size_t> offsets{0};
  std::vector<index_t> columns;
  std::vector<count_t> values;

  std::size_t rows() const noexcept { return offsets.size() - 1; }
  std::size_t nonzeros() const noexcept { return columns.size(); }
};

/**
 * Hyperedge adjacency product C = H * H^T computed row by row with a dense
 * accumulator (Gustavson). C(i, j) = |e_i ∩ e_j|; the diagonal holds |e_i|.
 * Columns within a row are ascending.
 */
inline CountMatrix hyperedge_adjacency_product(const Hypergraph& h, count_t* accumulations = nullptr) {
  const auto m = h.num_edges();
  CountMatrix c;
  c.offsets.reserve(m + 1);
  std::vector<count_t> acc(m, 0);
  std::vector<index_t> touched;
  count_t updates = 0;
  for (index_t i = 0; i < m; ++i) {
    touched.clear();
    for (index_t v : h.edge(i)) {
      for (index_t j : h.vertex(v)) {
        ++updates;
        if (acc[j]++ == 0) touched.push_back(j);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (index_t j : touched) {
      c.columns.push_back(j);
      c.values.push_back(acc[j]);
      acc[j] = 0;
    }
    c.offsets.push_back(c.columns.size());
  }
  if (accumulations) *accumulations = updates;
  return c;
}

/**
 * Matrix baseline: materializes the full hyperedge adjacency product, then
 * keeps entries with j > i and value >= s. The diagonal is skipped by index
 * rather than subtracted, since C(i, i) = |e_i|. Weights are always exact.
 *
 * Stats: candidate_pairs counts off-diagonal upper entries of the product;
 * no set intersections are performed.
 */
inline std::pair<SLineEdgeList, RunStats> spgemm_filter_s_overlap(const Hypergraph& h, std::size_t s) {
  require_positive_s(s);
  SLineEdgeList out;
  out.s = s;
  out.weighted = true;
  RunStats stats;
  count_t updates = 0;
  {
    PhaseTimer timer(stats, "overlap");
    auto product = hyperedge_adjacency_product(h, &updates);
    for (index_t i = 0; i < product.rows(); ++i) {
      for (auto k = product.offsets[i]; k < product.offsets[i + 1]; ++k) {
        const index_t j = product.columns[k];
        if (j <= i) continue;
        ++stats.candidate_pairs;
        if (product.values[k] >= s) {
          out.pairs.push_back({i, j});
          out.weights.push_back(product.values[k]);
        }
      }
    }
  }
  stats.per_worker_visits = {updates};
  return {std::move(out), std::move(stats)};
}

}  // namespace sline
