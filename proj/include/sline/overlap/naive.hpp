#pragma once

#include <utility>

#include "sline/core/hypergraph.hpp"
#include "sline/overlap/set_intersection.hpp"
#include "sline/overlap/types.hpp"

namespace sline {

/// Number of unordered hyperedge pairs the all-pairs kernel examines: m(m-1)/2.
constexpr count_t naive_candidate_count(count_t m) noexcept { return m < 2 ? 0 : m * (m - 1) / 2; }

/**
 * All-pairs baseline: intersects every unordered hyperedge pair.
 * Quadratic in m; use naive_candidate_count() to size a run first.
 */
inline std::pair<SLineEdgeList, RunStats> naive_s_overlap(const Hypergraph& h, std::size_t s, bool weighted = false) {
  require_positive_s(s);
  SLineEdgeList out;
  out.s = s;
  out.weighted = weighted;
  RunStats stats;
  {
    PhaseTimer timer(stats, "overlap");
    const auto m = static_cast<index_t>(h.num_edges());
    for (index_t i = 0; i < m; ++i) {
      for (index_t j = i + 1; j < m; ++j) {
        ++stats.candidate_pairs;
        ++stats.set_intersections;
        auto count = intersection_size(h.edge(i), h.edge(j));
        if (count >= s) {
          out.pairs.push_back({i, j});
          if (weighted) out.weights.push_back(count);
        }
      }
    }
  }
  stats.per_worker_visits = {stats.candidate_pairs};
  return {std::move(out), std::move(stats)};
}

}  // namespace sline
