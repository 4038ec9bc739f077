#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sline {

/// Dense 0-based identifier used inside every kernel.
using index_t = std::uint32_t;

/// Identifier as it appeared in an input file.
using label_t = std::uint64_t;

/**
 * Compressed sparse row adjacency: row r owns targets[offsets[r] .. offsets[r+1]).
 *
 * Rows built through from_pairs() are strictly ascending, which the merge-based
 * set intersections in the overlap kernels rely on.
 */
template <class Index = index_t>
class csr_adjacency {
public:
  using index_type = Index;

  csr_adjacency() : offsets_(1, 0) {}

  /// Builds rows from (row, column) pairs. Duplicates collapse; rows come out sorted.
  static csr_adjacency from_pairs(std::vector<std::pair<Index, Index>> pairs, std::size_t num_rows) {
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    csr_adjacency out;
    out.offsets_.assign(num_rows + 1, 0);
    out.targets_.reserve(pairs.size());
    for (auto [row, col] : pairs) {
      if (row >= num_rows) throw std::out_of_range("csr_adjacency: row id out of range");
      ++out.offsets_[row + 1];
      out.targets_.push_back(col);
    }
    for (std::size_t r = 0; r < num_rows; ++r) out.offsets_[r + 1] += out.offsets_[r];
    return out;
  }

  /// Transpose into a structure with `num_cols` rows. Rows of the result stay ascending.
  csr_adjacency transpose(std::size_t num_cols) const {
    csr_adjacency out;
    out.offsets_.assign(num_cols + 1, 0);
    for (Index c : targets_) {
      if (c >= num_cols) throw std::out_of_range("csr_adjacency: column id out of range");
      ++out.offsets_[c + 1];
    }
    for (std::size_t c = 0; c < num_cols; ++c) out.offsets_[c + 1] += out.offsets_[c];
    out.targets_.resize(targets_.size());
    std::vector<std::size_t> cursor(out.offsets_.begin(), out.offsets_.end() - 1);
    for (std::size_t r = 0; r + 1 < offsets_.size(); ++r) {
      for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) {
        out.targets_[cursor[targets_[k]]++] = static_cast<Index>(r);
      }
    }
    return out;
  }

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  std::size_t num_entries() const noexcept { return targets_.size(); }

  std::span<const Index> operator[](std::size_t row) const noexcept {
    return {targets_.data() + offsets_[row], offsets_[row + 1] - offsets_[row]};
  }

  std::size_t degree(std::size_t row) const noexcept { return offsets_[row + 1] - offsets_[row]; }

  bool operator==(const csr_adjacency&) const = default;

private:
  std::vector<std::size_t> offsets_;
  std::vector<Index> targets_;
};

}  // namespace sline
