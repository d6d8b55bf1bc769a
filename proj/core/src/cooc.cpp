#include "leakstat/cooc.hpp"

#include <cmath>

#include "leakstat/csv.hpp"

namespace leakstat {

CoocMatrix cooccurrence_matrix(const Corpus& corpus) {
  const std::size_t m = corpus.m();
  CoocMatrix c(m, static_cast<std::int64_t>(corpus.size()));
  if (m == 0) return c;

  // Keyword-major layout: one bitset over documents per keyword, so each
  // pairwise count is a popcount of an AND.
  const std::size_t n = corpus.size();
  std::vector<Bitset> columns(m, Bitset(n));
  for (std::size_t d = 0; d < n; ++d)
    for (std::uint32_t kw : corpus.documents[d].membership.set_positions())
      columns[kw].set(d);

  for (std::size_t i = 0; i < m; ++i) {
    c.at(i, i) = static_cast<std::int64_t>(columns[i].count());
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto joint = static_cast<std::int64_t>(
          Bitset::intersection_count(columns[i], columns[j]));
      c.at(i, j) = joint;
      c.at(j, i) = joint;
    }
  }
  return c;
}

Matrix cofrequency(const CoocMatrix& c) {
  if (c.n == 0) throw EmptyDatasetError("co-frequency of an empty dataset");
  Matrix f(c.m, c.m);
  const double n = static_cast<double>(c.n);
  for (std::size_t i = 0; i < c.m; ++i)
    for (std::size_t j = 0; j < c.m; ++j)
      f(i, j) = static_cast<double>(c.at(i, j)) / n;
  return f;
}

SimilarityReport similarity_report(const CoocMatrix& c_ind,
                                   const CoocMatrix& c_atk) {
  if (c_ind.m != c_atk.m)
    throw DimensionMismatchError("co-occurrence matrices have different m");
  if (c_ind.n == 0 || c_atk.n == 0)
    throw EmptyDatasetError("similarity of an empty dataset");

  SimilarityReport report;
  report.sim_matrix = Matrix(c_ind.m, c_ind.m);
  const double n_ind = static_cast<double>(c_ind.n);
  const double n_atk = static_cast<double>(c_atk.n);
  for (std::size_t i = 0; i < c_ind.m; ++i)
    for (std::size_t j = 0; j < c_ind.m; ++j)
      report.sim_matrix(i, j) = static_cast<double>(c_ind.at(i, j)) / n_ind -
                                static_cast<double>(c_atk.at(i, j)) / n_atk;
  report.epsilon = report.sim_matrix.frobenius_norm();
  report.abs_distance = report.sim_matrix.max_abs();
  return report;
}

std::pair<double, double> similarity_metrics(const CoocMatrix& c_ind,
                                             const CoocMatrix& c_atk) {
  if (c_ind.m != c_atk.m)
    throw DimensionMismatchError("co-occurrence matrices have different m");
  if (c_ind.n == 0 || c_atk.n == 0)
    throw EmptyDatasetError("similarity of an empty dataset");
  const double n_ind = static_cast<double>(c_ind.n);
  const double n_atk = static_cast<double>(c_atk.n);
  double sum_sq = 0.0;
  double max_abs = 0.0;
  for (std::size_t idx = 0; idx < c_ind.counts.size(); ++idx) {
    const double d = static_cast<double>(c_ind.counts[idx]) / n_ind -
                     static_cast<double>(c_atk.counts[idx]) / n_atk;
    sum_sq += d * d;
    max_abs = std::max(max_abs, std::fabs(d));
  }
  return {std::sqrt(sum_sq), max_abs};
}

namespace {

std::string header_row(const KeywordUniverse& universe) {
  std::vector<std::string> fields(universe.keywords().begin(),
                                  universe.keywords().end());
  return csv_row(fields);
}

}  // namespace

void write_cooc_csv(std::ostream& out, const CoocMatrix& c,
                    const KeywordUniverse& universe) {
  if (universe.size() != c.m)
    throw DimensionMismatchError("universe size does not match matrix");
  out << header_row(universe);
  std::vector<std::string> fields(c.m);
  for (std::size_t i = 0; i < c.m; ++i) {
    for (std::size_t j = 0; j < c.m; ++j)
      fields[j] = std::to_string(c.at(i, j));
    out << csv_row(fields);
  }
}

void write_matrix_csv(std::ostream& out, const Matrix& matrix,
                      const KeywordUniverse& universe) {
  if (universe.size() != matrix.cols())
    throw DimensionMismatchError("universe size does not match matrix");
  out << header_row(universe);
  char buf[64];
  std::vector<std::string> fields(matrix.cols());
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", matrix(i, j));
      fields[j] = buf;
    }
    out << csv_row(fields);
  }
}

}  // namespace leakstat
