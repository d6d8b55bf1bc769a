#include "leakstat/split.hpp"

#include "leakstat/rng.hpp"

namespace leakstat {

SplitPair split_uniform(const Corpus& corpus, std::size_t n_atk,
                        std::size_t n_ind, std::uint64_t seed) {
  if (n_atk + n_ind > corpus.size())
    throw SizesExceedCorpusError(
        "n_atk + n_ind = " + std::to_string(n_atk + n_ind) +
        " exceeds corpus size " + std::to_string(corpus.size()));

  Rng rng(seed);
  const auto picked =
      rng.sample_without_replacement(corpus.size(), n_atk + n_ind);

  SplitPair pair;
  pair.method = SplitMethod::uniform;
  pair.seed = seed;
  pair.atk.universe = corpus.universe;
  pair.ind.universe = corpus.universe;
  pair.atk.documents.reserve(n_atk);
  pair.ind.documents.reserve(n_ind);
  for (std::size_t i = 0; i < picked.size(); ++i) {
    const DocumentVector& doc = corpus.documents[picked[i]];
    if (i < n_atk)
      pair.atk.documents.push_back(doc);
    else
      pair.ind.documents.push_back(doc);
  }
  return pair;
}

SplitPair split_temporal(const Corpus& corpus, std::int64_t cutoff) {
  SplitPair pair;
  pair.method = SplitMethod::temporal;
  pair.cutoff = cutoff;
  pair.atk.universe = corpus.universe;
  pair.ind.universe = corpus.universe;
  for (const DocumentVector& doc : corpus.documents) {
    if (!doc.timestamp)
      throw MissingTimestampError("document " + doc.id + " has no timestamp");
    if (*doc.timestamp < cutoff)
      pair.atk.documents.push_back(doc);
    else
      pair.ind.documents.push_back(doc);
  }
  return pair;
}

}  // namespace leakstat
