#pragma once

#include <cstdint>
#include <vector>

namespace slab {

/// Dense n x n integer cost matrix, row-major.
class CostMatrix {
 public:
  CostMatrix() = default;
  explicit CostMatrix(std::size_t n, std::int64_t fill = 0) : n_(n), cells_(n * n, fill) {}
  /// Throws ParameterError unless every row has rows.size() entries.
  explicit CostMatrix(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const noexcept { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> cells_;
};

struct Assignment {
  std::vector<std::int32_t> column_of;  // row -> column, a permutation
  std::int64_t total = 0;
  std::vector<std::int64_t> row_potential;
  std::vector<std::int64_t> column_potential;  // u_i + v_j <= c_ij, tight on matched pairs
};

/// Minimum-cost perfect assignment in O(n^3) with integer potentials.
/// Deterministic for equal input.
Assignment hungarian_min(const CostMatrix& c);

}  // namespace slab
