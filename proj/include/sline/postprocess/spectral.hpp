#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sline/postprocess/components.hpp"

namespace sline {

/// Row-major dense square matrix.
struct DenseMatrix {
  std::size_t order = 0;
  std::vector<double> data;

  explicit DenseMatrix(std::size_t n = 0) : order(n), data(n * n, 0.0) {}
  double& operator()(std::size_t r, std::size_t c) noexcept { return data[r * order + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data[r * order + c]; }
};

/**
 * All eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
 * Sweeps until the off-diagonal mass is below 1e-15 of the Frobenius norm.
 */
inline std::vector<double> jacobi_eigenvalues(DenseMatrix a, int max_sweeps = 100) {
  const std::size_t n = a.order;
  double norm = 0.0;
  for (double x : a.data) norm += x * x;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
    if (off <= 1e-30 * norm || off == 0.0) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

/// L = I - D^{-1/2} A D^{-1/2}. Isolated vertices get a zero row and column.
inline DenseMatrix normalized_laplacian(const CompactGraph& g) {
  const auto n = g.num_vertices();
  DenseMatrix l(n);
  std::vector<double> inv_sqrt(n, 0.0);
  for (index_t v = 0; v < n; ++v) {
    if (g.degree(v) > 0) inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v)));
  }
  for (index_t u = 0; u < n; ++u) {
    if (g.degree(u) > 0) l(u, u) = 1.0;
    for (index_t v : g.neighbors(u)) l(u, v) = -inv_sqrt[u] * inv_sqrt[v];
  }
  return l;
}

inline std::vector<double> normalized_laplacian_spectrum(const CompactGraph& g) {
  return jacobi_eigenvalues(normalized_laplacian(g));
}

/**
 * Second-smallest eigenvalue of the normalized Laplacian of a connected graph.
 * Throws std::invalid_argument for fewer than two vertices or a disconnected graph.
 */
inline double normalized_algebraic_connectivity(const CompactGraph& g) {
  if (g.num_vertices() < 2) throw std::invalid_argument("algebraic connectivity needs at least 2 vertices");
  auto labels = connected_components(g);
  if (std::any_of(labels.begin(), labels.end(), [](index_t l) { return l != 0; }))
    throw std::invalid_argument("algebraic connectivity of a disconnected graph is ambiguous; extract a component");
  return normalized_laplacian_spectrum(g)[1];
}

}  // namespace sline
