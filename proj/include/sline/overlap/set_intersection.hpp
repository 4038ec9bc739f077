#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "sline/core/csr.hpp"

namespace sline {

namespace detail {

struct no_count {
  constexpr void operator()() const noexcept {}
};

// Merge-style intersection of two strictly ascending lists. Stops as soon as
// `limit` common elements were seen. `tick` runs once per element comparison step.
template <class Tick>
constexpr std::size_t merge_intersect(std::span<const index_t> a, std::span<const index_t> b,
                                      std::size_t limit, Tick&& tick) {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t found = 0;
  while (i < a.size() && j < b.size()) {
    tick();
    const index_t x = a[i];
    const index_t y = b[j];
    // branchless advance: both move on a match
    i += x <= y;
    j += y <= x;
    found += x == y;
    if (found == limit) break;
  }
  return found;
}

}  // namespace detail

/// |a ∩ b| for strictly ascending lists.
constexpr std::size_t intersection_size(std::span<const index_t> a, std::span<const index_t> b) {
  return detail::merge_intersect(a, b, static_cast<std::size_t>(-1), detail::no_count{});
}

/// True iff |a ∩ b| >= s. Returns at the s-th common element without scanning further.
constexpr bool intersects_at_least(std::span<const index_t> a, std::span<const index_t> b, std::size_t s) {
  if (s == 0) return true;
  return detail::merge_intersect(a, b, s, detail::no_count{}) == s;
}

/// Instrumented variant; adds the number of comparison steps to `comparisons`.
inline bool intersects_at_least(std::span<const index_t> a, std::span<const index_t> b, std::size_t s,
                                std::uint64_t& comparisons) {
  if (s == 0) return true;
  return detail::merge_intersect(a, b, s, [&comparisons] { ++comparisons; }) == s;
}

}  // namespace sline
