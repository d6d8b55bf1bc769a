#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "leakstat/cooc.hpp"
#include "leakstat/corpus.hpp"
#include "leakstat/matrix.hpp"

namespace leakstat {

// Independent per-keyword Bernoulli document model.
struct BernoulliModel {
  std::vector<double> p;  // each in (0,1)

  std::size_t m() const { return p.size(); }
};

// Two-topic mixture whose topic-1 weight moves linearly over the document
// time index; induces keyword dependence and temporal drift.
struct TopicMixtureModel {
  BernoulliModel topic_a;
  BernoulliModel topic_b;
  double weight_start = 1.0;  // topic_a weight at t = 0
  double weight_end = 0.0;    // topic_a weight at t = n-1

  std::size_t m() const { return topic_a.m(); }
  double weight_at(std::size_t t, std::size_t n) const;
};

using DocumentModel = std::variant<BernoulliModel, TopicMixtureModel>;

std::size_t model_width(const DocumentModel& model);

// n documents drawn i.i.d. (mixtures pick the topic per document from its
// synthetic timestamp 0..n-1). Each document uses the substream
// derive_seed(seed, doc_index), so the corpus is reproducible bit-for-bit
// and per-document sampling may run in any order.
Corpus sample_corpus(const DocumentModel& model, std::size_t n,
                     std::uint64_t seed);

// Same sampling stream as sample_corpus, but accumulates the co-occurrence
// counts directly instead of materializing documents. Equivalent to
// cooccurrence_matrix(sample_corpus(model, n, seed)).
CoocMatrix sample_cooccurrence(const DocumentModel& model, std::size_t n,
                               std::uint64_t seed);

// p_ij = p_i * p_j off the diagonal, p_ii = p_i.
Matrix theoretical_coprob(const BernoulliModel& model);

}  // namespace leakstat
