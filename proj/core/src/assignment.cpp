#include "leakstat/assignment.hpp"

namespace leakstat {

Assignment solve_linear_assignment(const CostMatrix& costs) {
  const std::size_t n = costs.rows;
  const std::size_t m = costs.cols;
  if (n == 0) return {};
  if (n > m)
    throw InfeasibleError("assignment needs rows <= cols, got " +
                          std::to_string(n) + " x " + std::to_string(m));

  constexpr double kInf = std::numeric_limits<double>::infinity();

  // 1-based potentials; row_of[j] is the row assigned to column j (0 = none).
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0), minv(m + 1, 0.0);
  std::vector<std::size_t> row_of(m + 1, 0), way(m + 1, 0);
  std::vector<char> used(m + 1, 0);

  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = costs.at(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      if (delta == kInf)
        throw InfeasibleError("no feasible assignment (forbidden entries)");
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else if (minv[j] != kInf) {
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

  Assignment result;
  result.col_of_row.assign(n, 0);
  for (std::size_t j = 1; j <= m; ++j) {
    if (row_of[j] == 0) continue;
    result.col_of_row[row_of[j] - 1] = j - 1;
    result.total_cost += costs.at(row_of[j] - 1, j - 1);
  }
  return result;
}

}  // namespace leakstat
