#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>
#include <vector>

#include "sline/core/hypergraph.hpp"

namespace sline::generate {

/// Each (edge, vertex) incidence present independently with probability `density`.
template <class Rng>
Hypergraph bernoulli(Rng& rng, std::size_t n, std::size_t m, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<index_t, index_t>> pairs;
  for (index_t e = 0; e < m; ++e)
    for (index_t v = 0; v < n; ++v)
      if (coin(rng)) pairs.emplace_back(e, v);
  return Hypergraph::from_incidences(std::move(pairs), n, m);
}

/**
 * Heavy-tailed hypergraph: edge sizes follow P(k) ~ k^-exponent on
 * [min_size, max_size]; members are drawn with Zipf-like vertex popularity so
 * that a few hub vertices create many wedges.
 */
template <class Rng>
Hypergraph power_law(Rng& rng, std::size_t n, std::size_t m, double exponent, std::size_t min_size,
                     std::size_t max_size, double vertex_skew = 1.0) {
  max_size = std::min(max_size, n);
  std::vector<double> size_weights;
  for (std::size_t k = min_size; k <= max_size; ++k) size_weights.push_back(std::pow(double(k), -exponent));
  std::discrete_distribution<std::size_t> size_dist(size_weights.begin(), size_weights.end());

  std::vector<double> vertex_weights(n);
  for (std::size_t v = 0; v < n; ++v) vertex_weights[v] = std::pow(double(v + 1), -vertex_skew);
  std::discrete_distribution<index_t> vertex_dist(vertex_weights.begin(), vertex_weights.end());
  std::uniform_int_distribution<index_t> uniform(0, static_cast<index_t>(n - 1));

  std::vector<std::pair<index_t, index_t>> pairs;
  for (index_t e = 0; e < m; ++e) {
    const std::size_t k = min_size + size_dist(rng);
    for (std::size_t t = 0; t < k; ++t) {
      // half popularity-driven, half uniform; duplicates collapse on build
      pairs.emplace_back(e, t % 2 == 0 ? vertex_dist(rng) : uniform(rng));
    }
  }
  return Hypergraph::from_incidences(std::move(pairs), n, m);
}

/**
 * Load-balance adversary: the first `heavy` hyperedges are large and draw from
 * a shared pool, so all expensive outer iterations sit in one contiguous ID block.
 */
template <class Rng>
Hypergraph contiguous_heavy(Rng& rng, std::size_t n, std::size_t m, std::size_t heavy, std::size_t heavy_size,
                            std::size_t light_size) {
  std::uniform_int_distribution<index_t> pick(0, static_cast<index_t>(n - 1));
  std::vector<std::pair<index_t, index_t>> pairs;
  for (index_t e = 0; e < m; ++e) {
    const std::size_t k = e < heavy ? heavy_size : light_size;
    for (std::size_t t = 0; t < k; ++t) pairs.emplace_back(e, pick(rng));
  }
  return Hypergraph::from_incidences(std::move(pairs), n, m);
}

}  // namespace sline::generate
