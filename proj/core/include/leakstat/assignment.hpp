#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "leakstat/errors.hpp"

namespace leakstat {

// Rectangular min-cost assignment input: rows <= cols, +infinity forbids a
// pairing.
struct CostMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> cost;

  CostMatrix() = default;
  CostMatrix(std::size_t r, std::size_t c)
      : rows(r), cols(c), cost(r * c, 0.0) {}

  double& at(std::size_t r, std::size_t c) { return cost[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return cost[r * cols + c]; }

  static constexpr double forbidden() {
    return std::numeric_limits<double>::infinity();
  }
};

struct Assignment {
  std::vector<std::size_t> col_of_row;  // injective
  double total_cost = 0.0;
};

// Jonker-Volgenant-style shortest augmenting path; ties resolved toward the
// lowest column index, so results are deterministic.
Assignment solve_linear_assignment(const CostMatrix& costs);

}  // namespace leakstat
