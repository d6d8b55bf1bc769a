#pragma once

#include <string>

#include "leakstat/corpus.hpp"

namespace leakstat {

// Vectorized-corpus JSON: universe keywords plus each document's id,
// optional timestamp, and sorted list of set keyword indices.
void save_corpus_json(const Corpus& corpus, const std::string& path);
Corpus load_corpus_json(const std::string& path);

}  // namespace leakstat
