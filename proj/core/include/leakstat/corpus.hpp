#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "leakstat/bitset.hpp"
#include "leakstat/errors.hpp"

namespace leakstat {

using StopwordSet = std::unordered_set<std::string>;

struct RawDocument {
  std::string id;
  std::optional<std::int64_t> timestamp;  // seconds since epoch
  std::string text;
};

// The ordered set W of m stemmed keywords; the order defines the indexing of
// every co-occurrence matrix built against it.
class KeywordUniverse {
 public:
  KeywordUniverse() = default;
  explicit KeywordUniverse(std::vector<std::string> keywords);

  std::size_t size() const { return keywords_.size(); }
  const std::vector<std::string>& keywords() const { return keywords_; }
  const std::string& keyword(std::size_t i) const { return keywords_[i]; }
  std::optional<std::uint32_t> position(std::string_view stem) const;

 private:
  std::vector<std::string> keywords_;
  std::unordered_map<std::string, std::uint32_t> position_;
};

struct DocumentVector {
  std::string id;
  std::optional<std::int64_t> timestamp;
  Bitset membership;  // bit i set iff universe keyword i occurs
};

struct Corpus {
  std::shared_ptr<const KeywordUniverse> universe;
  std::vector<DocumentVector> documents;

  std::size_t size() const { return documents.size(); }
  std::size_t m() const { return universe ? universe->size() : 0; }
};

struct TokenizerOptions {
  std::size_t min_token_length = 3;  // raw tokens shorter than this are dropped
};

inline constexpr std::size_t kDefaultUniverseCeiling = 3000;

// Lowercases, splits on non-alphabetic characters, drops short tokens and
// stop words, then Porter-stems each remaining token. Order and duplicates
// are preserved.
std::vector<std::string> tokenize(std::string_view text,
                                  const StopwordSet& stopwords,
                                  const TokenizerOptions& options = {});

// The m stems with the highest document frequency, ties broken
// lexicographically ascending.
KeywordUniverse build_universe(std::span<const RawDocument> raws,
                               std::size_t m, const StopwordSet& stopwords,
                               const TokenizerOptions& options = {},
                               std::size_t universe_ceiling =
                                   kDefaultUniverseCeiling);

DocumentVector vectorize(const RawDocument& raw, const KeywordUniverse& universe,
                         const StopwordSet& stopwords,
                         const TokenizerOptions& options = {});

Corpus vectorize_all(std::span<const RawDocument> raws,
                     std::shared_ptr<const KeywordUniverse> universe,
                     const StopwordSet& stopwords,
                     const TokenizerOptions& options = {});

// The bundled English stop-word list (mirrored by data/stopwords_en.txt).
const StopwordSet& english_stopwords();

// One token per line, UTF-8; '#' lines and blank lines are ignored.
StopwordSet load_stopwords(const std::string& path);

// Ingestion formats.
std::vector<RawDocument> load_raw_documents_csv(const std::string& path);
std::vector<RawDocument> load_raw_documents_dir(const std::string& path);

// Deletes every match of `pattern` (ECMAScript regex) from each document's
// text; used for mailing-list signature stripping.
void apply_signature_filter(std::vector<RawDocument>& raws,
                            const std::string& pattern);

}  // namespace leakstat
