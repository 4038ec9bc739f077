#pragma once

#include <json.hpp>

#include <ostream>
#include <string>

#include "sline/core/hypergraph.hpp"
#include "sline/overlap/types.hpp"
#include "sline/postprocess/squeeze.hpp"
#include "sline/scheduling/workload.hpp"

namespace sline {

using json = nlohmann::ordered_json;

inline json to_json(const DegreeStats& st) {
  json histogram = json::object();
  for (auto [size, count] : st.edge_size_histogram) histogram[std::to_string(size)] = count;
  return {{"n", st.num_vertices},
          {"m", st.num_edges},
          {"avg_edge_size", st.avg_edge_size},
          {"max_vertex_degree", st.max_vertex_degree},
          {"max_edge_size", st.max_edge_size},
          {"histogram", histogram}};
}

/// Phase keys are emitted in pipeline order; phases that did not run are omitted.
inline json to_json(const RunStats& st) {
  json phases = json::object();
  for (const char* key : {"load", "relabel", "overlap", "squeeze", "components"}) {
    if (auto it = st.phase_times.find(key); it != st.phase_times.end()) phases[key] = it->second;
  }
  return {{"candidate_pairs", st.candidate_pairs},
          {"set_intersections", st.set_intersections},
          {"per_worker_visits", st.per_worker_visits},
          {"phase_times", phases}};
}

inline json to_json(const BalanceReport& r) {
  return {{"min", r.min}, {"max", r.max}, {"mean", r.mean}, {"stddev", r.stddev}, {"imbalance", r.imbalance}};
}

/// `i<TAB>j[<TAB>weight]` per line using the hypergraph's edge labels.
inline void write_edge_list(std::ostream& out, const SLineEdgeList& edges, const Hypergraph& h) {
  for (std::size_t k = 0; k < edges.pairs.size(); ++k) {
    out << h.edge_label(edges.pairs[k].u) << '\t' << h.edge_label(edges.pairs[k].v);
    if (edges.weighted) out << '\t' << edges.weights[k];
    out << '\n';
  }
}

/// Squeeze sidecar: `compact_id<TAB>original_id` per surviving hyperedge.
inline void write_squeeze_map(std::ostream& out, const IdMap& map, const Hypergraph& h) {
  for (index_t c = 0; c < map.size(); ++c) out << c << '\t' << h.edge_label(map.original(c)) << '\n';
}

}  // namespace sline
