#include "leakstat/leakage.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

#include <json.hpp>

#include "leakstat/bitset.hpp"
#include "leakstat/rng.hpp"

namespace leakstat {

SimulatedIndex build_index(const Corpus& ind, std::uint64_t seed,
                           int padding_g) {
  if (padding_g < 1) throw DomainError("padding_g must be >= 1");

  SimulatedIndex index;
  index.universe = ind.universe;
  index.n_ind = ind.size();
  index.padding_g = padding_g;

  const std::size_t m = ind.m();
  const std::size_t n = ind.size();

  index.doc_ids.reserve(n);
  for (const DocumentVector& doc : ind.documents)
    index.doc_ids.push_back(doc.id);

  // Secret keyword -> token permutation.
  index.token_of.resize(m);
  std::iota(index.token_of.begin(), index.token_of.end(), 0u);
  Rng perm_rng(derive_seed(seed, 0));
  perm_rng.shuffle(index.token_of);

  index.postings.assign(m, {});
  for (std::size_t d = 0; d < n; ++d)
    for (std::uint32_t kw : ind.documents[d].membership.set_positions())
      index.postings[kw].push_back(static_cast<std::uint32_t>(d));

  if (padding_g > 1) {
    const std::uint64_t pad_seed = derive_seed(seed, 1);
    std::uint32_t next_dummy = static_cast<std::uint32_t>(n);
    for (std::size_t kw = 0; kw < m; ++kw) {
      auto& posting = index.postings[kw];
      if (posting.empty()) continue;
      const std::size_t g = static_cast<std::size_t>(padding_g);
      const std::size_t target = ((posting.size() + g - 1) / g) * g;
      std::size_t needed = target - posting.size();
      if (needed == 0) continue;

      std::vector<std::uint32_t> candidates;
      candidates.reserve(n - posting.size());
      Bitset member(n);
      for (std::uint32_t d : posting) member.set(d);
      for (std::uint32_t d = 0; d < n; ++d)
        if (!member.test(d)) candidates.push_back(d);

      Rng rng(derive_seed(pad_seed, kw));
      const std::size_t from_real = std::min(needed, candidates.size());
      for (std::size_t idx : rng.sample_without_replacement(candidates.size(),
                                                            from_real))
        posting.push_back(candidates[idx]);
      needed -= from_real;
      while (needed-- > 0) {
        posting.push_back(next_dummy);
        index.doc_ids.push_back("dummy-" +
                                std::to_string(next_dummy - n));
        ++next_dummy;
      }
    }
  }

  for (auto& posting : index.postings)
    std::sort(posting.begin(), posting.end());
  return index;
}

std::pair<LeakageView, GroundTruth> observe_queries(const SimulatedIndex& index,
                                                    std::size_t l,
                                                    std::uint64_t seed) {
  const std::size_t m = index.m();
  if (l < 1 || l > m)
    throw TooManyQueriesError("l = " + std::to_string(l) +
                              " outside [1, m = " + std::to_string(m) + "]");

  Rng rng(seed);
  const auto chosen = rng.sample_without_replacement(m, l);

  // Emitted in ascending token order so the view leaks nothing about which
  // keywords were drawn.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> token_kw;
  token_kw.reserve(l);
  for (std::size_t kw : chosen)
    token_kw.emplace_back(index.token_of[kw], static_cast<std::uint32_t>(kw));
  std::sort(token_kw.begin(), token_kw.end());

  LeakageView view;
  GroundTruth truth;
  view.n_ind = index.n_ind;
  view.doc_ids = index.doc_ids;
  view.queries.reserve(l);
  view.results.reserve(l);
  for (const auto& [token, kw] : token_kw) {
    view.queries.push_back(token);
    view.results.push_back(index.postings[kw]);
    truth.keyword_of.emplace(token, kw);
  }

  const std::size_t universe_docs = index.doc_ids.size();
  std::vector<Bitset> result_bits(l, Bitset(universe_docs));
  for (std::size_t a = 0; a < l; ++a)
    for (std::uint32_t d : view.results[a]) result_bits[a].set(d);

  view.qcooc.assign(l * l, 0);
  for (std::size_t a = 0; a < l; ++a) {
    view.qcooc[a * l + a] = static_cast<std::int64_t>(view.results[a].size());
    for (std::size_t b = a + 1; b < l; ++b) {
      const auto joint = static_cast<std::int64_t>(
          Bitset::intersection_count(result_bits[a], result_bits[b]));
      view.qcooc[a * l + b] = joint;
      view.qcooc[b * l + a] = joint;
    }
  }
  return {std::move(view), std::move(truth)};
}

LeakageView select_known_queries(const LeakageView& view,
                                 const GroundTruth& truth, std::size_t k,
                                 std::uint64_t seed) {
  if (k > view.l())
    throw KTooLargeError("k = " + std::to_string(k) + " exceeds l = " +
                         std::to_string(view.l()));
  LeakageView out = view;
  out.known.clear();
  Rng rng(seed);
  for (std::size_t pos : rng.sample_without_replacement(view.l(), k)) {
    const std::uint32_t token = view.queries[pos];
    out.known.push_back({token, truth.keyword_of.at(token)});
  }
  std::sort(out.known.begin(), out.known.end(),
            [](const KnownQuery& a, const KnownQuery& b) {
              return a.token < b.token;
            });
  return out;
}

void save_leakage_json(const LeakageView& view, const std::string& path) {
  nlohmann::json doc;
  doc["format"] = "leakstat-leakage-v1";
  doc["n_ind"] = view.n_ind;
  doc["queries"] = nlohmann::json::array();
  for (std::size_t a = 0; a < view.l(); ++a) {
    nlohmann::json q;
    q["token"] = view.queries[a];
    auto ids = nlohmann::json::array();
    for (std::uint32_t d : view.results[a]) ids.push_back(view.doc_ids[d]);
    q["results"] = std::move(ids);
    doc["queries"].push_back(std::move(q));
  }
  doc["known"] = nlohmann::json::array();
  for (const KnownQuery& kq : view.known)
    doc["known"].push_back({{"token", kq.token}, {"keyword", kq.keyword}});

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write leakage file: " + path);
  out << doc.dump(2) << '\n';
}

LeakageView load_leakage_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open leakage file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad leakage JSON: ") + e.what());
  }
  if (doc.value("format", "") != "leakstat-leakage-v1")
    throw ParseError("unrecognized leakage file format");

  LeakageView view;
  view.n_ind = doc.at("n_ind").get<std::size_t>();
  std::unordered_map<std::string, std::uint32_t> ordinal_of;
  for (const auto& q : doc.at("queries")) {
    view.queries.push_back(q.at("token").get<std::uint32_t>());
    std::vector<std::uint32_t> result;
    for (const auto& id : q.at("results")) {
      const std::string name = id.get<std::string>();
      auto [it, inserted] = ordinal_of.emplace(
          name, static_cast<std::uint32_t>(view.doc_ids.size()));
      if (inserted) view.doc_ids.push_back(name);
      result.push_back(it->second);
    }
    std::sort(result.begin(), result.end());
    view.results.push_back(std::move(result));
  }
  for (const auto& kq : doc.at("known"))
    view.known.push_back({kq.at("token").get<std::uint32_t>(),
                          kq.at("keyword").get<std::uint32_t>()});

  const std::size_t l = view.l();
  const std::size_t universe_docs = view.doc_ids.size();
  std::vector<Bitset> result_bits(l, Bitset(universe_docs));
  for (std::size_t a = 0; a < l; ++a)
    for (std::uint32_t d : view.results[a]) result_bits[a].set(d);
  view.qcooc.assign(l * l, 0);
  for (std::size_t a = 0; a < l; ++a) {
    view.qcooc[a * l + a] = static_cast<std::int64_t>(view.results[a].size());
    for (std::size_t b = a + 1; b < l; ++b) {
      const auto joint = static_cast<std::int64_t>(
          Bitset::intersection_count(result_bits[a], result_bits[b]));
      view.qcooc[a * l + b] = joint;
      view.qcooc[b * l + a] = joint;
    }
  }
  return view;
}

}  // namespace leakstat
