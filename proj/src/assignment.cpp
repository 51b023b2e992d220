#include "slab/assignment.hpp"

#include <algorithm>
#include <limits>

#include "slab/error.hpp"

namespace slab {

CostMatrix::CostMatrix(const std::vector<std::vector<std::int64_t>>& rows) : n_(rows.size()) {
  cells_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw ParameterError("cost matrix is not square");
    cells_.insert(cells_.end(), row.begin(), row.end());
  }
}

Assignment hungarian_min(const CostMatrix& c) {
  const std::size_t n = c.size();
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  // 1-based shortest augmenting path formulation; column 0 is a sentinel.
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);

  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of[j0];
      std::int64_t delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = c(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment a;
  a.column_of.assign(n, 0);
  a.row_potential.assign(u.begin() + 1, u.end());
  a.column_potential.assign(v.begin() + 1, v.end());
  for (std::size_t j = 1; j <= n; ++j) a.column_of[row_of[j] - 1] = static_cast<std::int32_t>(j - 1);
  for (std::size_t i = 0; i < n; ++i) a.total += c(i, static_cast<std::size_t>(a.column_of[i]));
  return a;
}

}  // namespace slab
