#include "leakstat/corpus_io.hpp"

#include <fstream>

#include <json.hpp>

namespace leakstat {

void save_corpus_json(const Corpus& corpus, const std::string& path) {
  nlohmann::json doc;
  doc["format"] = "leakstat-corpus-v1";
  doc["universe"] = corpus.universe ? corpus.universe->keywords()
                                    : std::vector<std::string>{};
  auto docs = nlohmann::json::array();
  for (const DocumentVector& dv : corpus.documents) {
    nlohmann::json entry;
    entry["id"] = dv.id;
    if (dv.timestamp) entry["timestamp"] = *dv.timestamp;
    entry["keywords"] = dv.membership.set_positions();
    docs.push_back(std::move(entry));
  }
  doc["documents"] = std::move(docs);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write corpus file: " + path);
  out << doc.dump(2) << '\n';
}

Corpus load_corpus_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad corpus JSON: ") + e.what());
  }
  if (doc.value("format", "") != "leakstat-corpus-v1")
    throw ParseError("unrecognized corpus file format");

  Corpus corpus;
  corpus.universe = std::make_shared<KeywordUniverse>(
      doc.at("universe").get<std::vector<std::string>>());
  const std::size_t m = corpus.universe->size();
  for (const auto& entry : doc.at("documents")) {
    DocumentVector dv;
    dv.id = entry.at("id").get<std::string>();
    if (entry.contains("timestamp"))
      dv.timestamp = entry.at("timestamp").get<std::int64_t>();
    dv.membership = Bitset(m);
    for (const auto& kw : entry.at("keywords")) {
      const auto idx = kw.get<std::size_t>();
      if (idx >= m) throw ParseError("keyword index out of range in " + dv.id);
      dv.membership.set(idx);
    }
    corpus.documents.push_back(std::move(dv));
  }
  return corpus;
}

}  // namespace leakstat
