#pragma once

#include <algorithm>
#include <chrono>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sline/core/csr.hpp"

namespace sline {

using count_t = std::uint64_t;

/// An undirected s-line graph edge between hyperedges `u < v`.
struct LineEdge {
  index_t u = 0;
  index_t v = 0;
  auto operator<=>(const LineEdge&) const = default;
};

/**
 * Edge list of an s-line graph. Canonical form: strictly i < j per pair,
 * lexicographically sorted, no duplicates. When `weighted`, `weights` is
 * parallel to `pairs` and holds the exact intersection sizes.
 */
struct SLineEdgeList {
  std::size_t s = 1;
  bool weighted = false;
  std::vector<LineEdge> pairs;
  std::vector<count_t> weights;

  std::size_t size() const noexcept { return pairs.size(); }
  bool empty() const noexcept { return pairs.empty(); }

  /// Sorts and removes duplicates, keeping `weights` aligned.
  void canonicalize() {
    if (!weighted) {
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      return;
    }
    std::vector<std::size_t> order(pairs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) { return pairs[a] < pairs[b]; });
    std::vector<LineEdge> p;
    std::vector<count_t> w;
    p.reserve(order.size());
    w.reserve(order.size());
    for (auto k : order) {
      if (!p.empty() && p.back() == pairs[k]) continue;
      p.push_back(pairs[k]);
      w.push_back(weights[k]);
    }
    pairs = std::move(p);
    weights = std::move(w);
  }
};

/// Compares pair sets only, ignoring weights.
inline bool same_pairs(const SLineEdgeList& a, const SLineEdgeList& b) { return a.pairs == b.pairs; }

/**
 * Toggles for the pruning heuristics of the efficient kernel. The
 * strictly-upper-triangular rule (only visit e_j > e_i) is not a toggle: every
 * kernel applies it.
 */
struct HeuristicConfig {
  bool degree_pruning = true;
  bool skip_visited = true;
  bool short_circuit = true;

  static constexpr HeuristicConfig all() { return {true, true, true}; }
  static constexpr HeuristicConfig none() { return {false, false, false}; }

  /// Ablation presets: f0 all on, f1 degree pruning, f2 skip visited,
  /// f3 short circuit, f4 none.
  static HeuristicConfig preset(std::string_view name) {
    if (name == "f0") return all();
    if (name == "f1") return {true, false, false};
    if (name == "f2") return {false, true, false};
    if (name == "f3") return {false, false, true};
    if (name == "f4") return none();
    throw std::invalid_argument("unknown heuristic preset '" + std::string(name) + "'");
  }

  bool operator==(const HeuristicConfig&) const = default;
};

/// Work counters from one overlap run. Per-worker values are merged after the parallel loop.
struct RunStats {
  count_t candidate_pairs = 0;
  count_t set_intersections = 0;
  std::vector<count_t> per_worker_visits;
  std::map<std::string, double> phase_times;  // seconds

  count_t total_visits() const {
    return std::accumulate(per_worker_visits.begin(), per_worker_visits.end(), count_t{0});
  }
};

/// Adds wall time of the enclosing scope to `stats.phase_times[name]`.
class PhaseTimer {
public:
  PhaseTimer(RunStats& stats, std::string name)
      : stats_(stats), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  PhaseTimer(const PhaseTimer&) = delete;
  PhaseTimer& operator=(const PhaseTimer&) = delete;
  ~PhaseTimer() {
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
    stats_.phase_times[name_] += dt.count();
  }

private:
  RunStats& stats_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

inline void require_positive_s(std::size_t s) {
  if (s < 1) throw std::invalid_argument("s must be at least 1");
}

}  // namespace sline
