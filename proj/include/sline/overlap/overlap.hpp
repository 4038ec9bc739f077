#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "sline/overlap/efficient.hpp"
#include "sline/overlap/naive.hpp"
#include "sline/overlap/spgemm.hpp"
#include "sline/overlap/wedge.hpp"

namespace sline {

enum class Algorithm { naive, wedge, efficient, spgemm };

inline Algorithm parse_algorithm(std::string_view name) {
  if (name == "naive") return Algorithm::naive;
  if (name == "wedge") return Algorithm::wedge;
  if (name == "efficient") return Algorithm::efficient;
  if (name == "spgemm") return Algorithm::spgemm;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "'");
}

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::naive: return "naive";
    case Algorithm::wedge: return "wedge";
    case Algorithm::efficient: return "efficient";
    case Algorithm::spgemm: return "spgemm";
  }
  return "unknown";
}

/// Runs one kernel. `cfg` and `plan` only affect the efficient kernel.
inline std::pair<SLineEdgeList, RunStats> compute_s_overlap(Algorithm algorithm, const Hypergraph& h, std::size_t s,
                                                            HeuristicConfig cfg = HeuristicConfig::all(),
                                                            const PartitionPlan& plan = {}, bool weighted = false) {
  switch (algorithm) {
    case Algorithm::naive: return naive_s_overlap(h, s, weighted);
    case Algorithm::wedge: return wedge_s_overlap(h, s, weighted);
    case Algorithm::efficient: return efficient_s_overlap(h, s, cfg, plan, weighted);
    case Algorithm::spgemm: {
      auto result = spgemm_filter_s_overlap(h, s);
      if (!weighted) {
        result.first.weighted = false;
        result.first.weights.clear();
      }
      return result;
    }
  }
  throw std::invalid_argument("unknown algorithm");
}

}  // namespace sline
