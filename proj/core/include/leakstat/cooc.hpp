#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "leakstat/corpus.hpp"
#include "leakstat/matrix.hpp"

namespace leakstat {

// Symmetric m x m co-occurrence counts over a dataset of n documents.
// counts(i,j) = number of documents containing both keyword i and keyword j;
// the diagonal holds per-keyword document counts.
struct CoocMatrix {
  std::size_t m = 0;
  std::int64_t n = 0;
  std::vector<std::int64_t> counts;  // dense row-major, m*m

  CoocMatrix() = default;
  CoocMatrix(std::size_t m_, std::int64_t n_)
      : m(m_), n(n_), counts(m_ * m_, 0) {}

  std::int64_t& at(std::size_t i, std::size_t j) { return counts[i * m + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const {
    return counts[i * m + j];
  }
};

struct SimilarityReport {
  Matrix sim_matrix;    // cofrequency(ind) - cofrequency(atk)
  double epsilon;       // Frobenius norm over the full matrix
  double abs_distance;  // max absolute entry (infinity norm)
};

CoocMatrix cooccurrence_matrix(const Corpus& corpus);

// counts / n elementwise; the maximum-likelihood co-probability estimates.
Matrix cofrequency(const CoocMatrix& c);

SimilarityReport similarity_report(const CoocMatrix& c_ind,
                                   const CoocMatrix& c_atk);

// Computes epsilon and abs_distance without materializing the similarity
// matrix; used by sweeps where only the metrics are logged.
std::pair<double, double> similarity_metrics(const CoocMatrix& c_ind,
                                             const CoocMatrix& c_atk);

// Row-major CSV with the keyword list as header.
void write_cooc_csv(std::ostream& out, const CoocMatrix& c,
                    const KeywordUniverse& universe);
void write_matrix_csv(std::ostream& out, const Matrix& matrix,
                      const KeywordUniverse& universe);

}  // namespace leakstat
