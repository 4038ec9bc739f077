#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "sline/core/csr.hpp"

namespace sline {

enum class Strategy { blocked, cyclic };

inline Strategy parse_strategy(std::string_view name) {
  if (name == "blocked") return Strategy::blocked;
  if (name == "cyclic") return Strategy::cyclic;
  throw std::invalid_argument("unknown partition strategy '" + std::string(name) + "'");
}

inline const char* to_string(Strategy s) { return s == Strategy::blocked ? "blocked" : "cyclic"; }

/**
 * How the hyperedge iteration space 0..m-1 is spread over workers.
 *
 * blocked: contiguous chunks. With `chunk == 0` chunks are claimed on demand at
 * run time (guided self-scheduling, halving chunk size as work drains); with a
 * fixed `chunk` the layout is static and reproducible.
 *
 * cyclic: worker w owns every ID whose residue modulo `stride` maps to w,
 * i.e. w, w + stride, w + 2 * stride, ... when stride == workers.
 */
struct PartitionPlan {
  Strategy strategy = Strategy::blocked;
  std::size_t workers = 1;
  std::size_t stride = 0;  // 0: same as workers
  std::size_t chunk = 0;   // 0: adaptive

  static PartitionPlan blocked(std::size_t workers, std::size_t chunk = 0) {
    return {Strategy::blocked, workers, 0, chunk};
  }
  static PartitionPlan cyclic(std::size_t workers, std::size_t stride = 0) {
    return {Strategy::cyclic, workers, stride, 0};
  }

  std::size_t effective_stride() const noexcept { return stride == 0 ? workers : stride; }
  bool adaptive() const noexcept { return strategy == Strategy::blocked && chunk == 0; }

  void validate() const {
    if (workers < 1) throw std::invalid_argument("partition plan: workers must be >= 1");
    if (strategy == Strategy::cyclic && effective_stride() < 1)
      throw std::invalid_argument("partition plan: stride must be >= 1");
  }
};

namespace detail {

inline std::size_t cyclic_owner(std::size_t id, std::size_t stride, std::size_t workers) {
  return (id % stride) % workers;
}

// Contiguous [begin, end) ID range of worker `w` for a static blocked layout.
inline std::pair<std::size_t, std::size_t> blocked_range(std::size_t w, std::size_t workers, std::size_t m,
                                                         std::size_t chunk) {
  const std::size_t c = std::max<std::size_t>(chunk, 1);
  const std::size_t chunks = (m + c - 1) / c;
  const std::size_t first = w * chunks / workers;
  const std::size_t last = (w + 1) * chunks / workers;
  return {std::min(first * c, m), std::min(last * c, m)};
}

}  // namespace detail

/**
 * Static per-worker ID sequences for `plan` over m hyperedges. Every ID in
 * 0..m-1 appears in exactly one sequence, each sequence ascending.
 *
 * For adaptive blocked plans this is the initial even split; the executor may
 * hand out chunks differently at run time.
 */
inline std::vector<std::vector<index_t>> assign(const PartitionPlan& plan, std::size_t m) {
  plan.validate();
  std::vector<std::vector<index_t>> out(plan.workers);
  if (plan.strategy == Strategy::cyclic) {
    const auto stride = plan.effective_stride();
    for (std::size_t id = 0; id < m; ++id) {
      out[detail::cyclic_owner(id, stride, plan.workers)].push_back(static_cast<index_t>(id));
    }
    return out;
  }
  for (std::size_t w = 0; w < plan.workers; ++w) {
    auto [b, e] = detail::blocked_range(w, plan.workers, m, plan.chunk);
    for (std::size_t id = b; id < e; ++id) out[w].push_back(static_cast<index_t>(id));
  }
  return out;
}

namespace detail {

// One thread per worker index; the first exception is rethrown after all join.
template <class Fn>
void run_on_workers(std::size_t workers, Fn&& fn, std::atomic<bool>* cancel = nullptr) {
  if (workers == 1) {
    fn(std::size_t{0});
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          fn(w);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          if (cancel) cancel->store(true, std::memory_order_relaxed);
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/**
 * Runs `body(worker, id)` for every id in 0..m-1, spread per `plan`. Each
 * worker index is bound to exactly one thread, so per-worker scratch indexed
 * by `worker` needs no synchronization. Exceptions from a worker are rethrown
 * on the calling thread after all workers have stopped.
 */
template <class Body>
void parallel_for_edges(const PartitionPlan& plan, std::size_t m, Body&& body) {
  plan.validate();
  const std::size_t workers = plan.workers;
  std::atomic<bool> cancelled{false};

  if (plan.adaptive()) {
    std::atomic<std::size_t> cursor{0};
    detail::run_on_workers(
        workers,
        [&](std::size_t w) {
          for (;;) {
            std::size_t begin = cursor.load(std::memory_order_relaxed);
            std::size_t len = 0;
            do {
              if (begin >= m || cancelled.load(std::memory_order_relaxed)) return;
              len = std::max<std::size_t>(1, (m - begin) / (2 * workers));
            } while (!cursor.compare_exchange_weak(begin, begin + len, std::memory_order_relaxed));
            for (std::size_t id = begin; id < begin + len; ++id) body(w, static_cast<index_t>(id));
          }
        },
        &cancelled);
    return;
  }

  if (plan.strategy == Strategy::cyclic) {
    const auto stride = plan.effective_stride();
    detail::run_on_workers(workers, [&](std::size_t w) {
      // residues r < stride owned by w are r = w, w + workers, ...
      for (std::size_t base = 0; base < m; base += stride) {
        for (std::size_t r = w; r < stride && base + r < m; r += workers) body(w, static_cast<index_t>(base + r));
      }
    });
    return;
  }

  detail::run_on_workers(workers, [&](std::size_t w) {
    auto [b, e] = detail::blocked_range(w, workers, m, plan.chunk);
    for (std::size_t id = b; id < e; ++id) body(w, static_cast<index_t>(id));
  });
}

}  // namespace sline
