#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "leakstat/corpus.hpp"
#include "leakstat/porter.hpp"
#include "leakstat/rng.hpp"

using namespace leakstat;

namespace {

// Suffix-stripping pairs from the algorithm's published rule examples, one
// or more per rule family.
const std::pair<const char*, const char*> kStemOracle[] = {
    // step 1a
    {"caresses", "caress"},
    {"ponies", "poni"},
    {"ties", "ti"},
    {"caress", "caress"},
    {"cats", "cat"},
    // step 1b
    {"feed", "feed"},
    {"agreed", "agre"},
    {"plastered", "plaster"},
    {"bled", "bled"},
    {"motoring", "motor"},
    {"sing", "sing"},
    {"conflated", "conflat"},
    {"troubled", "troubl"},
    {"sized", "size"},
    {"hopping", "hop"},
    {"tanned", "tan"},
    {"falling", "fall"},
    {"hissing", "hiss"},
    {"fizzed", "fizz"},
    {"failing", "fail"},
    {"filing", "file"},
    // step 1c
    {"happy", "happi"},
    {"sky", "sky"},
    // step 2 entry words (later steps keep stripping)
    {"relational", "relat"},
    {"conditional", "condit"},
    {"rational", "ration"},
    {"valenci", "valenc"},
    {"hesitanci", "hesit"},
    {"digitizer", "digit"},
    {"conformabli", "conform"},
    {"radicalli", "radic"},
    {"differentli", "differ"},
    {"vileli", "vile"},
    {"analogousli", "analog"},
    {"vietnamization", "vietnam"},
    {"predication", "predic"},
    {"operator", "oper"},
    {"feudalism", "feudal"},
    {"decisiveness", "decis"},
    {"hopefulness", "hope"},
    {"callousness", "callous"},
    {"formaliti", "formal"},
    {"sensitiviti", "sensit"},
    {"sensibiliti", "sensibl"},
    // step 3 entry words
    {"triplicate", "triplic"},
    {"formative", "form"},
    {"formalize", "formal"},
    {"electriciti", "electr"},
    {"electrical", "electr"},
    {"hopeful", "hope"},
    {"goodness", "good"},
    // step 4
    {"revival", "reviv"},
    {"allowance", "allow"},
    {"inference", "infer"},
    {"airliner", "airlin"},
    {"gyroscopic", "gyroscop"},
    {"adjustable", "adjust"},
    {"defensible", "defens"},
    {"irritant", "irrit"},
    {"replacement", "replac"},
    {"adjustment", "adjust"},
    {"dependent", "depend"},
    {"adoption", "adopt"},
    {"homologou", "homolog"},
    {"communism", "commun"},
    {"activate", "activ"},
    {"angulariti", "angular"},
    {"homologous", "homolog"},
    {"effective", "effect"},
    {"bowdlerize", "bowdler"},
    // step 5a
    {"probate", "probat"},
    {"rate", "rate"},
    {"cease", "ceas"},
    // step 5b
    {"controll", "control"},
    {"roll", "roll"},
    // multi-step
    {"generalizations", "gener"},
    {"oscillators", "oscil"},
};

std::vector<RawDocument> docs(std::initializer_list<const char*> texts) {
  std::vector<RawDocument> out;
  int i = 0;
  for (const char* t : texts)
    out.push_back({"doc" + std::to_string(i++), std::nullopt, t});
  return out;
}

}  // namespace

TEST_CASE("porter stemmer matches the published rule examples") {
  for (const auto& [word, stem] : kStemOracle) {
    CAPTURE(word);
    CHECK(porter_stem(word) == stem);
  }
}

namespace {

// The suffix stripper is not a fixed point everywhere: step 1a re-strips a
// bare trailing 's' ("decis" -> "deci") and step 5a can fire again after an
// earlier e-restoration ("agre" -> "agr").
bool restems(std::string_view stem) {
  if (stem == "agre") return true;
  return stem.size() >= 2 && stem.back() == 's' &&
         stem[stem.size() - 2] != 's';
}

}  // namespace

TEST_CASE("porter stemmer is idempotent on its own outputs") {
  for (const auto& [word, stem] : kStemOracle) {
    if (restems(stem)) continue;
    CAPTURE(stem);
    CHECK(porter_stem(stem) == stem);
  }
  CHECK(porter_stem("agre") == "agr");
  CHECK(porter_stem("decis") == "deci");
}

TEST_CASE("tokenize lowercases, filters stop words, stems") {
  StopwordSet stops{"the", "was"};
  CHECK(tokenize("The runner was running", stops) ==
        std::vector<std::string>{"runner", "run"});
  CHECK(tokenize("", stops).empty());
  CHECK(tokenize("and or the", StopwordSet{"and", "or", "the"}).empty());
}

TEST_CASE("tokenize drops short tokens and keeps duplicates in order") {
  StopwordSet none;
  CHECK(tokenize("a bb ccc dddd", none) ==
        std::vector<std::string>{"ccc", "dddd"});
  CHECK(tokenize("running, running; RUNNING!", none) ==
        std::vector<std::string>{"run", "run", "run"});
  TokenizerOptions opts;
  opts.min_token_length = 1;
  CHECK(tokenize("a bb", none, opts) == std::vector<std::string>{"a", "bb"});
}

TEST_CASE("tokenize is deterministic and idempotent on stemmed streams") {
  StopwordSet none;
  for (const auto& [word, stem] : kStemOracle) {
    if (std::string(stem).size() < 3) continue;
    if (restems(stem)) continue;
    const auto once = tokenize(stem, none);
    REQUIRE(once.size() == 1);
    std::string joined;
    for (const auto& t : once) joined += t + " ";
    CHECK(tokenize(joined, none) == once);
    CHECK(tokenize(joined, none) == tokenize(joined, none));
  }
}

TEST_CASE("build_universe ranks by document frequency with lexicographic ties") {
  TokenizerOptions opts;
  opts.min_token_length = 1;
  const auto raws = docs({"a b", "a c", "a"});
  const auto universe = build_universe(raws, 2, {}, opts);
  CHECK(universe.keywords() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("build_universe with m = distinct stems returns all, sorted") {
  TokenizerOptions opts;
  opts.min_token_length = 1;
  const auto raws = docs({"x y", "y z", "z z z"});
  const auto universe = build_universe(raws, 3, {}, opts);
  // y and z appear in 2 docs each, x in 1.
  CHECK(universe.keywords() == std::vector<std::string>{"y", "z", "x"});
}

TEST_CASE("build_universe errors when too few stems exist") {
  const auto raws = docs({"alpha beta", "alpha"});
  CHECK_THROWS_AS(build_universe(raws, 5, {}), TooFewKeywordsError);
  CHECK_THROWS_AS(build_universe(raws, 4000, {}), DomainError);
}

TEST_CASE("build_universe matches a brute-force frequency count") {
  // Letters-only vocabulary whose words are their own stems.
  const std::string letters = "bcdfghklmnpr";
  std::vector<std::string> vocab;
  for (int i = 0; i < 40; ++i) {
    std::string w = "word";
    w += letters[i % letters.size()];
    w += letters[(i / letters.size()) % letters.size()];
    vocab.push_back(w);
    REQUIRE(porter_stem(w) == w);
  }
  Rng rng(99);
  std::vector<RawDocument> raws;
  std::vector<std::int64_t> freq(vocab.size(), 0);
  for (int d = 0; d < 1000; ++d) {
    RawDocument doc;
    doc.id = "d" + std::to_string(d);
    std::string text;
    for (std::size_t v = 0; v < vocab.size(); ++v) {
      if (rng.bernoulli(0.02 + 0.9 * static_cast<double>(v) /
                                   static_cast<double>(vocab.size()))) {
        text += vocab[v] + " ";
        ++freq[v];
      }
    }
    doc.text = text;
    raws.push_back(std::move(doc));
  }
  const std::size_t m = 10;
  const auto universe = build_universe(raws, m, {});

  std::vector<std::pair<std::string, std::int64_t>> expected;
  for (std::size_t v = 0; v < vocab.size(); ++v)
    expected.emplace_back(porter_stem(vocab[v]), freq[v]);
  std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (std::size_t i = 0; i < m; ++i)
    CHECK(universe.keyword(i) == expected[i].first);
}

TEST_CASE("build_universe is invariant under document reordering") {
  auto raws = docs({"apple banana", "banana cherry", "cherry apple date",
                    "date elder", "elder apple"});
  const auto u1 = build_universe(raws, 4, {});
  std::reverse(raws.begin(), raws.end());
  const auto u2 = build_universe(raws, 4, {});
  CHECK(u1.keywords() == u2.keywords());
}

TEST_CASE("vectorize sets exactly the matching universe bits") {
  const auto raws =
      docs({"apple banana cherry", "durian fig", "apple apple fig"});
  const auto universe = std::make_shared<KeywordUniverse>(
      build_universe(raws, 5, {}));

  const auto all = vectorize({"x", std::nullopt, "apple banana cherry durian fig"},
                             *universe, {});
  CHECK(all.membership.count() == 5);

  const auto none = vectorize({"y", std::nullopt, "zebra yak"}, *universe, {});
  CHECK(none.membership.count() == 0);

  // Hand trace: "apple" and "fig" present, others absent.
  const auto some = vectorize({"z", 42, "apple fig zebra"}, *universe, {});
  CHECK(some.membership.count() == 2);
  CHECK(some.timestamp == 42);
  CHECK(some.membership.test(*universe->position(porter_stem("apple"))));
  CHECK(some.membership.test(*universe->position(porter_stem("fig"))));
}

TEST_CASE("vectorize bit count never exceeds token count") {
  StopwordSet stops = english_stopwords();
  const auto raws = docs({"the quick brown fox jumps over lazy dogs",
                          "pack my box with five dozen liquor jugs",
                          "how vexingly quick daft zebras jump"});
  const auto universe =
      std::make_shared<KeywordUniverse>(build_universe(raws, 8, stops));
  for (const auto& raw : raws) {
    const auto tokens = tokenize(raw.text, stops);
    const auto doc = vectorize(raw, *universe, stops);
    CHECK(doc.membership.count() <= tokens.size());
  }
}

TEST_CASE("bundled stop-word file matches the embedded list") {
  const auto from_file = load_stopwords(std::string(LEAKSTAT_SOURCE_DIR) +
                                        "/data/stopwords_en.txt");
  CHECK(from_file == english_stopwords());
}

TEST_CASE("CSV ingestion honors RFC 4180 quoting") {
  const std::string path = "test_ingest.csv";
  {
    std::ofstream out(path, std::ios::binary);
    out << "id,timestamp,text\r\n";
    out << "m1,100,\"hello, world\nnewline inside\"\r\n";
    out << "m2,,\"quote \"\" inside\"\r\n";
    out << "m3,300,plain text\r\n";
  }
  const auto raws = load_raw_documents_csv(path);
  REQUIRE(raws.size() == 3);
  CHECK(raws[0].id == "m1");
  CHECK(raws[0].timestamp == 100);
  CHECK(raws[0].text == "hello, world\nnewline inside");
  CHECK(!raws[1].timestamp.has_value());
  CHECK(raws[1].text == "quote \" inside");
  CHECK(raws[2].timestamp == 300);
  std::filesystem::remove(path);
}

TEST_CASE("CSV ingestion rejects bad headers and duplicate ids") {
  const std::string path = "test_ingest_bad.csv";
  {
    std::ofstream out(path, std::ios::binary);
    out << "id,text\nm1,hello\n";
  }
  CHECK_THROWS_AS(load_raw_documents_csv(path), ParseError);
  {
    std::ofstream out(path, std::ios::binary);
    out << "id,timestamp,text\nm1,1,hello\nm1,2,world\n";
  }
  CHECK_THROWS_AS(load_raw_documents_csv(path), ParseError);
  std::filesystem::remove(path);
}

TEST_CASE("directory ingestion uses filenames as ids") {
  const std::string dir = "test_ingest_dir";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir + "/b.txt") << "banana cherry";
    std::ofstream(dir + "/a.txt") << "apple banana";
  }
  const auto raws = load_raw_documents_dir(dir);
  REQUIRE(raws.size() == 2);
  CHECK(raws[0].id == "a.txt");
  CHECK(raws[1].id == "b.txt");
  CHECK(raws[0].timestamp.has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("signature filter strips matching text") {
  std::vector<RawDocument> raws = docs({"real content STOP here STOP again"});
  apply_signature_filter(raws, "STOP[a-z ]*");
  CHECK(tokenize(raws[0].text, {}) == tokenize("real content", {}));
}
