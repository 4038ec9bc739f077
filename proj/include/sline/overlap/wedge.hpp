#pragma once

#include <utility>

#include "sline/core/hypergraph.hpp"
#include "sline/overlap/set_intersection.hpp"
#include "sline/overlap/types.hpp"

namespace sline {

/**
 * Wedge enumeration e_i -> v -> e_j without pruning heuristics. Only pairs
 * with e_j > e_i are intersected, so a pair sharing k vertices is intersected
 * k times; duplicates are removed before returning.
 */
inline std::pair<SLineEdgeList, RunStats> wedge_s_overlap(const Hypergraph& h, std::size_t s, bool weighted = false) {
  require_positive_s(s);
  SLineEdgeList out;
  out.s = s;
  out.weighted = weighted;
  RunStats stats;
  count_t visits = 0;
  {
    PhaseTimer timer(stats, "overlap");
    const auto m = static_cast<index_t>(h.num_edges());
    for (index_t ei = 0; ei < m; ++ei) {
      for (index_t v : h.edge(ei)) {
        for (index_t ej : h.vertex(v)) {
          ++visits;
          if (ei >= ej) continue;
          ++stats.candidate_pairs;
          ++stats.set_intersections;
          auto count = intersection_size(h.edge(ei), h.edge(ej));
          if (count >= s) {
            out.pairs.push_back({ei, ej});
            if (weighted) out.weights.push_back(count);
          }
        }
      }
    }
    out.canonicalize();
  }
  stats.per_worker_visits = {visits};
  return {std::move(out), std::move(stats)};
}

}  // namespace sline
