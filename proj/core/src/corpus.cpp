#include "leakstat/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "leakstat/csv.hpp"
#include "leakstat/porter.hpp"

namespace leakstat {

KeywordUniverse::KeywordUniverse(std::vector<std::string> keywords)
    : keywords_(std::move(keywords)) {
  if (keywords_.empty())
    throw DomainError("keyword universe cannot be empty");
  position_.reserve(keywords_.size());
  for (std::uint32_t i = 0; i < keywords_.size(); ++i) {
    if (!position_.emplace(keywords_[i], i).second)
      throw DomainError("duplicate keyword in universe: " + keywords_[i]);
  }
}

std::optional<std::uint32_t> KeywordUniverse::position(
    std::string_view stem) const {
  auto it = position_.find(std::string(stem));
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> tokenize(std::string_view text,
                                  const StopwordSet& stopwords,
                                  const TokenizerOptions& options) {
  std::vector<std::string> out;
  std::string token;
  auto flush = [&] {
    if (token.size() >= options.min_token_length &&
        stopwords.find(token) == stopwords.end())
      out.push_back(porter_stem(token));
    token.clear();
  };
  for (unsigned char c : text) {
    if (c >= 'a' && c <= 'z') {
      token.push_back(static_cast<char>(c));
    } else if (c >= 'A' && c <= 'Z') {
      token.push_back(static_cast<char>(c - 'A' + 'a'));
    } else {
      flush();
    }
  }
  flush();
  return out;
}

KeywordUniverse build_universe(std::span<const RawDocument> raws,
                               std::size_t m, const StopwordSet& stopwords,
                               const TokenizerOptions& options,
                               std::size_t universe_ceiling) {
  if (m < 2) throw DomainError("universe size m must be >= 2");
  if (m > universe_ceiling)
    throw DomainError("universe size m exceeds the configured ceiling of " +
                      std::to_string(universe_ceiling));

  std::unordered_map<std::string, std::int64_t> doc_freq;
  std::unordered_set<std::string> seen;
  for (const RawDocument& raw : raws) {
    seen.clear();
    for (std::string& stem : tokenize(raw.text, stopwords, options))
      if (seen.insert(stem).second) ++doc_freq[stem];
  }
  if (doc_freq.size() < m)
    throw TooFewKeywordsError("collection has " +
                              std::to_string(doc_freq.size()) +
                              " distinct stems, need " + std::to_string(m));

  std::vector<std::pair<std::string, std::int64_t>> ranked(doc_freq.begin(),
                                                           doc_freq.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::vector<std::string> keywords;
  keywords.reserve(m);
  for (std::size_t i = 0; i < m; ++i) keywords.push_back(ranked[i].first);
  return KeywordUniverse(std::move(keywords));
}

DocumentVector vectorize(const RawDocument& raw,
                         const KeywordUniverse& universe,
                         const StopwordSet& stopwords,
                         const TokenizerOptions& options) {
  DocumentVector doc;
  doc.id = raw.id;
  doc.timestamp = raw.timestamp;
  doc.membership = Bitset(universe.size());
  for (const std::string& stem : tokenize(raw.text, stopwords, options))
    if (auto pos = universe.position(stem)) doc.membership.set(*pos);
  return doc;
}

Corpus vectorize_all(std::span<const RawDocument> raws,
                     std::shared_ptr<const KeywordUniverse> universe,
                     const StopwordSet& stopwords,
                     const TokenizerOptions& options) {
  Corpus corpus;
  corpus.universe = std::move(universe);
  corpus.documents.reserve(raws.size());
  for (const RawDocument& raw : raws)
    corpus.documents.push_back(
        vectorize(raw, *corpus.universe, stopwords, options));
  return corpus;
}

namespace {

constexpr const char* kEnglishStopwords[] = {
    "a",       "about",   "above",    "after",   "again",      "against",
    "all",     "am",      "an",       "and",     "any",        "are",
    "as",      "at",      "be",       "because", "been",       "before",
    "being",   "below",   "between",  "both",    "but",        "by",
    "can",     "cannot",  "could",    "did",     "do",         "does",
    "doing",   "down",    "during",   "each",    "few",        "for",
    "from",    "further", "had",      "has",     "have",       "having",
    "he",      "her",     "here",     "hers",    "herself",    "him",
    "himself", "his",     "how",      "i",       "if",         "in",
    "into",    "is",      "it",       "its",     "itself",     "just",
    "me",      "more",    "most",     "my",      "myself",     "no",
    "nor",     "not",     "now",      "of",      "off",        "on",
    "once",    "only",    "or",       "other",   "our",        "ours",
    "ourselves", "out",   "over",     "own",     "same",       "she",
    "should",  "so",      "some",     "such",    "than",       "that",
    "the",     "their",   "theirs",   "them",    "themselves", "then",
    "there",   "these",   "they",     "this",    "those",      "through",
    "to",      "too",     "under",    "until",   "up",         "very",
    "was",     "we",      "were",     "what",    "when",       "where",
    "which",   "while",   "who",      "whom",    "why",        "will",
    "with",    "would",   "you",      "your",    "yours",      "yourself",
    "yourselves",
};

}  // namespace

const StopwordSet& english_stopwords() {
  static const StopwordSet set = [] {
    StopwordSet s;
    for (const char* w : kEnglishStopwords) s.insert(w);
    return s;
  }();
  return set;
}

StopwordSet load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open stop-word list: " + path);
  StopwordSet set;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' ||
                             line.back() == ' '))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    set.insert(line);
  }
  return set;
}

std::vector<RawDocument> load_raw_documents_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open CSV file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto rows = parse_csv(buffer.str());
  if (rows.empty()) throw ParseError("empty CSV file: " + path);
  const auto& header = rows[0];
  if (header.size() != 3 || header[0] != "id" || header[1] != "timestamp" ||
      header[2] != "text")
    throw ParseError("CSV header must be exactly: id,timestamp,text");

  std::vector<RawDocument> raws;
  raws.reserve(rows.size() - 1);
  std::unordered_set<std::string> ids;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 3)
      throw ParseError("CSV row " + std::to_string(r) + " has " +
                       std::to_string(row.size()) + " fields, expected 3");
    RawDocument doc;
    doc.id = row[0];
    if (!ids.insert(doc.id).second)
      throw ParseError("duplicate document id: " + doc.id);
    if (!row[1].empty()) {
      try {
        doc.timestamp = std::stoll(row[1]);
      } catch (const std::exception&) {
        throw ParseError("bad timestamp in CSV row " + std::to_string(r) +
                         ": " + row[1]);
      }
    }
    doc.text = row[2];
    raws.push_back(std::move(doc));
  }
  return raws;
}

std::vector<RawDocument> load_raw_documents_dir(const std::string& path) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(path))
    throw IoError("not a directory: " + path);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(path))
    if (entry.is_regular_file()) files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<RawDocument> raws;
  raws.reserve(files.size());
  for (const fs::path& file : files) {
    RawDocument doc;
    doc.id = file.filename().string();
    const auto ftime = fs::last_write_time(file);
    const auto sys = std::chrono::file_clock::to_sys(ftime);
    doc.timestamp = std::chrono::duration_cast<std::chrono::seconds>(
                        sys.time_since_epoch())
                        .count();
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + file.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    doc.text = buffer.str();
    raws.push_back(std::move(doc));
  }
  return raws;
}

void apply_signature_filter(std::vector<RawDocument>& raws,
                            const std::string& pattern) {
  const std::regex re(pattern);
  for (RawDocument& raw : raws)
    raw.text = std::regex_replace(raw.text, re, " ");
}

}  // namespace leakstat
