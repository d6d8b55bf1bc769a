#include "leakstat/synth.hpp"

#include <cstdio>

#include "leakstat/rng.hpp"

namespace leakstat {
namespace {

void validate_probs(const BernoulliModel& model) {
  if (model.p.empty()) throw DomainError("Bernoulli model has no keywords");
  for (double pi : model.p)
    if (!(pi > 0.0 && pi < 1.0))
      throw DomainError("Bernoulli probabilities must lie in (0,1)");
}

std::shared_ptr<const KeywordUniverse> synthetic_universe(std::size_t m) {
  std::vector<std::string> keywords;
  keywords.reserve(m);
  char buf[32];
  for (std::size_t i = 0; i < m; ++i) {
    std::snprintf(buf, sizeof(buf), "kw%04zu", i);
    keywords.emplace_back(buf);
  }
  return std::make_shared<KeywordUniverse>(std::move(keywords));
}

// Draws one document's keyword bits into `row`; the topic draw (if any)
// consumes the first variate of the per-document stream.
template <typename SetBit>
void sample_document(const DocumentModel& model, std::size_t t, std::size_t n,
                     Rng& rng, SetBit&& set_bit) {
  const BernoulliModel* topic = nullptr;
  if (const auto* bern = std::get_if<BernoulliModel>(&model)) {
    topic = bern;
  } else {
    const auto& mix = std::get<TopicMixtureModel>(model);
    topic = rng.bernoulli(mix.weight_at(t, n)) ? &mix.topic_a : &mix.topic_b;
  }
  for (std::size_t i = 0; i < topic->p.size(); ++i)
    if (rng.bernoulli(topic->p[i])) set_bit(i);
}

}  // namespace

double TopicMixtureModel::weight_at(std::size_t t, std::size_t n) const {
  if (n <= 1) return weight_start;
  const double frac = static_cast<double>(t) / static_cast<double>(n - 1);
  return weight_start + (weight_end - weight_start) * frac;
}

std::size_t model_width(const DocumentModel& model) {
  if (const auto* bern = std::get_if<BernoulliModel>(&model))
    return bern->m();
  return std::get<TopicMixtureModel>(model).m();
}

Corpus sample_corpus(const DocumentModel& model, std::size_t n,
                     std::uint64_t seed) {
  if (const auto* bern = std::get_if<BernoulliModel>(&model)) {
    validate_probs(*bern);
  } else {
    const auto& mix = std::get<TopicMixtureModel>(model);
    validate_probs(mix.topic_a);
    validate_probs(mix.topic_b);
    if (mix.topic_a.m() != mix.topic_b.m())
      throw DimensionMismatchError("mixture topics have different widths");
    if (mix.weight_start < 0.0 || mix.weight_start > 1.0 ||
        mix.weight_end < 0.0 || mix.weight_end > 1.0)
      throw DomainError("mixture weights must lie in [0,1]");
  }

  const std::size_t m = model_width(model);
  Corpus corpus;
  corpus.universe = synthetic_universe(m);
  corpus.documents.resize(n);
  char buf[32];
  for (std::size_t t = 0; t < n; ++t) {
    DocumentVector& doc = corpus.documents[t];
    std::snprintf(buf, sizeof(buf), "synth-%08zu", t);
    doc.id = buf;
    doc.timestamp = static_cast<std::int64_t>(t);
    doc.membership = Bitset(m);
    Rng rng(derive_seed(seed, t));
    sample_document(model, t, n, rng, [&](std::size_t i) {
      doc.membership.set(i);
    });
  }
  return corpus;
}

CoocMatrix sample_cooccurrence(const DocumentModel& model, std::size_t n,
                               std::uint64_t seed) {
  const std::size_t m = model_width(model);
  CoocMatrix c(m, static_cast<std::int64_t>(n));
  std::vector<std::uint32_t> present;
  present.reserve(m);
  for (std::size_t t = 0; t < n; ++t) {
    present.clear();
    Rng rng(derive_seed(seed, t));
    sample_document(model, t, n, rng, [&](std::size_t i) {
      present.push_back(static_cast<std::uint32_t>(i));
    });
    for (std::size_t a = 0; a < present.size(); ++a) {
      c.at(present[a], present[a]) += 1;
      for (std::size_t b = a + 1; b < present.size(); ++b) {
        c.at(present[a], present[b]) += 1;
        c.at(present[b], present[a]) += 1;
      }
    }
  }
  return c;
}

Matrix theoretical_coprob(const BernoulliModel& model) {
  validate_probs(model);
  const std::size_t m = model.m();
  Matrix coprob(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    coprob(i, i) = model.p[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      coprob(i, j) = model.p[i] * model.p[j];
      coprob(j, i) = coprob(i, j);
    }
  }
  return coprob;
}

}  // namespace leakstat
