#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace leakstat {

// Dense row-major real matrix; just enough linear-algebra surface for
// co-frequency and similarity computations.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<double>& data() const { return data_; }

  // sqrt of the sum of squares over every entry.
  double frobenius_norm() const {
    double sum = 0.0;
    for (double v : data_) sum += v * v;
    return std::sqrt(sum);
  }

  double max_abs() const {
    double best = 0.0;
    for (double v : data_) best = std::max(best, std::fabs(v));
    return best;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace leakstat
