#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sline/overlap/types.hpp"

namespace sline {

/// Spread of innermost-loop visits over workers.
struct BalanceReport {
  count_t min = 0;
  count_t max = 0;
  double mean = 0.0;
  double stddev = 0.0;
  double imbalance = 1.0;  // max / mean; 1.0 when nothing ran
};

inline BalanceReport workload_profile(const RunStats& stats) {
  const auto& visits = stats.per_worker_visits;
  if (visits.empty()) throw std::invalid_argument("workload_profile: no per-worker visit counts");
  BalanceReport r;
  auto [lo, hi] = std::minmax_element(visits.begin(), visits.end());
  r.min = *lo;
  r.max = *hi;
  r.mean = static_cast<double>(stats.total_visits()) / static_cast<double>(visits.size());
  double sq = 0.0;
  for (auto v : visits) sq += (static_cast<double>(v) - r.mean) * (static_cast<double>(v) - r.mean);
  r.stddev = std::sqrt(sq / static_cast<double>(visits.size()));
  r.imbalance = r.mean > 0.0 ? static_cast<double>(r.max) / r.mean : 1.0;
  return r;
}

}  // namespace sline
