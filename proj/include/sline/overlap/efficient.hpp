#pragma once

#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sline/core/hypergraph.hpp"
#include "sline/overlap/set_intersection.hpp"
#include "sline/overlap/types.hpp"
#include "sline/scheduling/partition.hpp"

namespace sline {

namespace detail {

struct alignas(64) overlap_scratch {
  std::vector<index_t> stamp;  // stamp[e_j] == e_i + 1: e_j already tried against e_i
  std::vector<LineEdge> pairs;
  std::vector<count_t> weights;
  count_t visits = 0;
  count_t candidates = 0;
  count_t intersections = 0;
};

}  // namespace detail

/**
 * Wedge-based s-overlap with pruning heuristics and a parallel outer loop.
 *
 * For each hyperedge e_i (spread over workers by `plan`), walks e_i -> v -> e_j
 * and tests only e_j > e_i. Heuristics:
 *   - degree_pruning: skip e_i or e_j when its size is below s;
 *   - skip_visited:   intersect each (e_i, e_j) at most once per e_i;
 *   - short_circuit:  stop the intersection at the s-th common vertex.
 * None of them changes the result. Requesting weights forces full counting.
 *
 * Stats: per_worker_visits counts innermost-loop hyperedge visits per worker,
 * candidate_pairs the visits with e_j > e_i, set_intersections the actual
 * intersection calls.
 */
inline std::pair<SLineEdgeList, RunStats> efficient_s_overlap(const Hypergraph& h, std::size_t s,
                                                              HeuristicConfig cfg = HeuristicConfig::all(),
                                                              const PartitionPlan& plan = {},
                                                              bool weighted = false) {
  require_positive_s(s);
  plan.validate();
  const std::size_t m = h.num_edges();
  if (m >= std::numeric_limits<index_t>::max()) throw std::length_error("too many hyperedges");

  SLineEdgeList out;
  out.s = s;
  out.weighted = weighted;
  RunStats stats;
  {
    PhaseTimer timer(stats, "overlap");

    std::vector<detail::overlap_scratch> scratch(plan.workers);
    const bool count_fully = weighted || !cfg.short_circuit;

    parallel_for_edges(plan, m, [&](std::size_t w, index_t ei) {
      auto& ws = scratch[w];
      if (cfg.degree_pruning && h.edge_size(ei) < s) return;
      if (cfg.skip_visited && ws.stamp.empty()) ws.stamp.assign(m, 0);
      const index_t mark = ei + 1;
      const auto members = h.edge(ei);

      for (index_t v : members) {
        for (index_t ej : h.vertex(v)) {
          ++ws.visits;
          if (ei >= ej) continue;
          ++ws.candidates;
          if (cfg.degree_pruning && h.edge_size(ej) < s) continue;
          if (cfg.skip_visited) {
            if (ws.stamp[ej] == mark) continue;
            ws.stamp[ej] = mark;
          }
          ++ws.intersections;
          if (count_fully) {
            auto count = intersection_size(members, h.edge(ej));
            if (count >= s) {
              ws.pairs.push_back({ei, ej});
              if (weighted) ws.weights.push_back(count);
            }
          } else if (intersects_at_least(members, h.edge(ej), s)) {
            ws.pairs.push_back({ei, ej});
          }
        }
      }
    });

    std::size_t total = 0;
    for (auto& ws : scratch) total += ws.pairs.size();
    out.pairs.reserve(total);
    if (weighted) out.weights.reserve(total);
    stats.per_worker_visits.reserve(plan.workers);
    for (auto& ws : scratch) {
      out.pairs.insert(out.pairs.end(), ws.pairs.begin(), ws.pairs.end());
      out.weights.insert(out.weights.end(), ws.weights.begin(), ws.weights.end());
      stats.per_worker_visits.push_back(ws.visits);
      stats.candidate_pairs += ws.candidates;
      stats.set_intersections += ws.intersections;
    }
    out.canonicalize();
  }
  return {std::move(out), std::move(stats)};
}

}  // namespace sline
