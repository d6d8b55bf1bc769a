#include "leakstat/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "leakstat/csv.hpp"
#include "leakstat/corpus_io.hpp"
#include "leakstat/leakage.hpp"
#include "leakstat/rng.hpp"
#include "leakstat/svg.hpp"

namespace leakstat {
namespace {

using nlohmann::json;

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<double> parse_probability_vector(const json& spec) {
  if (spec.is_array()) return spec.get<std::vector<double>>();
  if (spec.is_object() && spec.contains("linspace")) {
    const auto& ls = spec.at("linspace");
    const auto m = ls.at("m").get<std::size_t>();
    const double lo = ls.at("lo").get<double>();
    const double hi = ls.at("hi").get<double>();
    if (m < 1) throw ConfigError("linspace needs m >= 1");
    std::vector<double> p(m);
    for (std::size_t i = 0; i < m; ++i)
      p[i] = m == 1 ? lo
                    : lo + (hi - lo) * static_cast<double>(i) /
                               static_cast<double>(m - 1);
    return p;
  }
  throw ConfigError("probability vector must be an array or {\"linspace\":…}");
}

DocumentModel parse_model(const json& spec) {
  const std::string type = spec.at("type").get<std::string>();
  if (type == "bernoulli") {
    BernoulliModel model;
    model.p = parse_probability_vector(spec.at("p"));
    return model;
  }
  if (type == "topic_mixture") {
    TopicMixtureModel model;
    model.topic_a.p = parse_probability_vector(spec.at("topic_a").at("p"));
    model.topic_b.p = parse_probability_vector(spec.at("topic_b").at("p"));
    model.weight_start = spec.value("weight_start", 1.0);
    model.weight_end = spec.value("weight_end", 0.0);
    return model;
  }
  throw ConfigError("unknown model type: " + type);
}

AttackSpec parse_attack(const json& spec) {
  AttackSpec attack;
  attack.name = spec.at("name").get<std::string>();
  if (attack.name != "score" && attack.name != "refined_score" &&
      attack.name != "ihop")
    throw ConfigError("unknown attack: " + attack.name);
  attack.ref_speed = spec.value("ref_speed", 10);
  attack.ihop.n_iters = spec.value("n_iters", 500);
  attack.ihop.p_free = spec.value("p_free", 0.25);
  attack.ihop.smoothing = spec.value("smoothing", 1.0);
  return attack;
}

struct Unit {
  std::size_t index = 0;
  std::size_t n_atk = 0;
  std::size_t n_ind = 0;
  std::int64_t cutoff = 0;
};

std::vector<Unit> enumerate_units(const ExperimentConfig& config,
                                  std::size_t corpus_n) {
  std::vector<Unit> units;
  std::size_t index = 0;
  if (config.split == SplitMethod::uniform) {
    if (config.grid.n_atk.empty() || config.grid.n_ind.empty())
      throw ConfigError("uniform sweep needs a non-empty size grid");
    for (std::size_t na : config.grid.n_atk)
      for (std::size_t ni : config.grid.n_ind) {
        if (na < 1 || ni < 1)
          throw ConfigError("grid sizes must be >= 1");
        if (na + ni > corpus_n)
          throw ConfigError("grid point (" + std::to_string(na) + ", " +
                            std::to_string(ni) + ") exceeds corpus size " +
                            std::to_string(corpus_n));
        for (std::size_t r = 0; r < config.repetitions; ++r)
          units.push_back({index++, na, ni, 0});
      }
  } else {
    if (config.cutoffs.empty())
      throw ConfigError("temporal sweep needs at least one cutoff");
    for (std::int64_t cutoff : config.cutoffs)
      for (std::size_t r = 0; r < config.repetitions; ++r)
        units.push_back({index++, 0, 0, cutoff});
  }
  return units;
}

Prediction run_attack(const AttackSpec& attack, const LeakageView& view,
                      const CoocMatrix& c_atk, std::uint64_t seed) {
  if (attack.name == "score") return score_attack(view, c_atk);
  if (attack.name == "refined_score")
    return refined_score_attack(view, c_atk, attack.ref_speed);
  return ihop_attack(view, c_atk, attack.ihop, seed);
}

// Parallel map over unit indices with deterministic output slots.
template <typename Fn>
void for_each_unit(std::size_t count, unsigned threads, Fn&& fn) {
  unsigned n_threads = threads != 0 ? threads
                                    : std::thread::hardware_concurrency();
  if (n_threads == 0) n_threads = 1;
  n_threads = std::min<unsigned>(n_threads,
                                 static_cast<unsigned>(std::max<std::size_t>(
                                     count, 1)));
  if (n_threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

ExperimentConfig parse_config_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config JSON: ") + e.what());
  }

  ExperimentConfig config;
  config.dataset_label = doc.value("dataset_label", "dataset");
  config.m = doc.value("m", std::size_t{0});
  config.repetitions = doc.value("repetitions", std::size_t{1});
  config.k = doc.value("k", std::size_t{0});
  config.l = doc.value("l", std::size_t{0});
  config.padding_g = doc.value("padding_g", 1);
  config.master_seed = doc.value("master_seed", std::uint64_t{0});
  config.output_dir = doc.value("output_dir", ".");
  config.threads = doc.value("threads", 0u);

  const auto& corpus = doc.at("corpus");
  const std::string source = corpus.at("source").get<std::string>();
  if (source == "file") {
    config.corpus = FileSource{corpus.at("path").get<std::string>()};
  } else if (source == "synth") {
    SynthSource synth;
    synth.model = parse_model(corpus.at("model"));
    synth.n = corpus.at("n").get<std::size_t>();
    synth.seed = corpus.value("seed", std::uint64_t{0});
    config.corpus = std::move(synth);
  } else if (source == "ingest") {
    IngestSource ingest;
    ingest.path = corpus.at("path").get<std::string>();
    ingest.format = corpus.at("format").get<std::string>();
    if (ingest.format != "csv" && ingest.format != "dir")
      throw ConfigError("ingest format must be \"csv\" or \"dir\"");
    if (corpus.contains("stopwords"))
      ingest.stopwords_path = corpus.at("stopwords").get<std::string>();
    if (corpus.contains("signature_regex"))
      ingest.signature_regex =
          corpus.at("signature_regex").get<std::string>();
    ingest.min_token_length =
        corpus.value("min_token_length", std::size_t{3});
    if (config.m < 2) throw ConfigError("ingest source needs m >= 2");
    config.corpus = std::move(ingest);
  } else {
    throw ConfigError("unknown corpus source: " + source);
  }

  if (!doc.contains("attacks") || !doc.at("attacks").is_array() ||
      doc.at("attacks").empty())
    throw ConfigError("config needs a non-empty attack list");
  for (const auto& spec : doc.at("attacks"))
    config.attacks.push_back(parse_attack(spec));

  const auto& split = doc.at("split");
  const std::string method = split.at("method").get<std::string>();
  if (method == "uniform") {
    config.split = SplitMethod::uniform;
    config.grid.n_atk = split.at("n_atk").get<std::vector<std::size_t>>();
    config.grid.n_ind = split.at("n_ind").get<std::vector<std::size_t>>();
  } else if (method == "temporal") {
    config.split = SplitMethod::temporal;
    config.cutoffs = split.at("cutoffs").get<std::vector<std::int64_t>>();
  } else {
    throw ConfigError("unknown split method: " + method);
  }

  if (config.repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (config.padding_g < 1) throw ConfigError("padding_g must be >= 1");
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_json(buffer.str());
}

Corpus resolve_corpus(const ExperimentConfig& config) {
  if (const auto* file = std::get_if<FileSource>(&config.corpus))
    return load_corpus_json(file->path);
  if (const auto* synth = std::get_if<SynthSource>(&config.corpus))
    return sample_corpus(synth->model, synth->n, synth->seed);

  const auto& ingest = std::get<IngestSource>(config.corpus);
  std::vector<RawDocument> raws =
      ingest.format == "csv" ? load_raw_documents_csv(ingest.path)
                             : load_raw_documents_dir(ingest.path);
  if (ingest.signature_regex)
    apply_signature_filter(raws, *ingest.signature_regex);
  const StopwordSet stopwords = ingest.stopwords_path
                                    ? load_stopwords(*ingest.stopwords_path)
                                    : english_stopwords();
  TokenizerOptions tok;
  tok.min_token_length = ingest.min_token_length;
  auto universe = std::make_shared<KeywordUniverse>(
      build_universe(raws, config.m, stopwords, tok));
  return vectorize_all(raws, std::move(universe), stopwords, tok);
}

std::vector<ResultRow> run_sweep_rows(const ExperimentConfig& config,
                                      const Corpus& corpus) {
  const std::size_t m = corpus.m();
  if (m < 1) throw ConfigError("sweep corpus has an empty universe");
  const std::size_t l_eff = config.l == 0 ? m : config.l;
  if (l_eff > m)
    throw ConfigError("l = " + std::to_string(l_eff) + " exceeds m = " +
                      std::to_string(m));
  if (config.k > l_eff)
    throw ConfigError("k = " + std::to_string(config.k) + " exceeds l = " +
                      std::to_string(l_eff));
  for (const AttackSpec& attack : config.attacks)
    if ((attack.name == "score" || attack.name == "refined_score") &&
        config.k == 0)
      throw ConfigError(attack.name + " needs k >= 1 known queries");

  const std::vector<Unit> units = enumerate_units(config, corpus.size());
  const std::size_t n_attacks = config.attacks.size();
  std::vector<std::vector<ResultRow>> slots(units.size());

  for_each_unit(units.size(), config.threads, [&](std::size_t ui) {
    const Unit& unit = units[ui];
    const std::uint64_t unit_seed = derive_seed(config.master_seed, unit.index);
    try {
      SplitPair pair =
          config.split == SplitMethod::uniform
              ? split_uniform(corpus, unit.n_atk, unit.n_ind,
                              derive_seed(unit_seed, 0))
              : split_temporal(corpus, unit.cutoff);
      const CoocMatrix c_atk = cooccurrence_matrix(pair.atk);
      const CoocMatrix c_ind = cooccurrence_matrix(pair.ind);
      const auto [epsilon, abs_distance] = similarity_metrics(c_ind, c_atk);

      const SimulatedIndex index =
          build_index(pair.ind, derive_seed(unit_seed, 1), config.padding_g);
      auto [view, truth] =
          observe_queries(index, l_eff, derive_seed(unit_seed, 2));
      view = select_known_queries(view, truth, config.k,
                                  derive_seed(unit_seed, 3));

      std::vector<ResultRow>& rows = slots[ui];
      rows.reserve(n_attacks);
      for (std::size_t ai = 0; ai < n_attacks; ++ai) {
        const AttackSpec& attack = config.attacks[ai];
        const Prediction pred =
            run_attack(attack, view, c_atk, derive_seed(unit_seed, 4 + ai));
        ResultRow row;
        row.run_id = unit.index * n_attacks + ai;
        row.dataset_label = config.dataset_label;
        row.m = m;
        row.n_ind = static_cast<std::int64_t>(pair.ind.size());
        row.n_atk = static_cast<std::int64_t>(pair.atk.size());
        row.seed = unit_seed;
        row.epsilon = epsilon;
        row.abs_distance = abs_distance;
        row.attack = attack.name;
        row.k = config.k;
        row.l = l_eff;
        row.padding_g = config.padding_g;
        row.accuracy = accuracy(pred, truth, true);
        rows.push_back(std::move(row));
      }
    } catch (const Error& e) {
      throw Error(e.code(), "unit " + std::to_string(unit.index) + ": " +
                                e.what());
    }
  });

  std::vector<ResultRow> rows;
  rows.reserve(units.size() * n_attacks);
  for (auto& slot : slots)
    for (auto& row : slot) rows.push_back(std::move(row));
  std::sort(rows.begin(), rows.end(),
            [](const ResultRow& a, const ResultRow& b) {
              return a.run_id < b.run_id;
            });
  return rows;
}

std::string run_sweep(const ExperimentConfig& config) {
  const Corpus corpus = resolve_corpus(config);
  const std::vector<ResultRow> rows = run_sweep_rows(config, corpus);
  std::filesystem::create_directories(config.output_dir);
  const std::string path = config.output_dir + "/results.csv";
  write_results_csv(path, rows);
  return path;
}

namespace {
constexpr const char* kResultsHeader =
    "run_id,dataset_label,m,n_ind,n_atk,seed,epsilon,abs_distance,attack,k,l,"
    "padding_g,accuracy";
}

void write_results_csv(const std::string& path,
                       const std::vector<ResultRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write results file: " + path);
  out << kResultsHeader << '\n';
  for (const ResultRow& row : rows) {
    out << csv_row({std::to_string(row.run_id), row.dataset_label,
                    std::to_string(row.m), std::to_string(row.n_ind),
                    std::to_string(row.n_atk), std::to_string(row.seed),
                    format_double(row.epsilon),
                    format_double(row.abs_distance), row.attack,
                    std::to_string(row.k), std::to_string(row.l),
                    std::to_string(row.padding_g),
                    format_double(row.accuracy)});
  }
}

std::vector<ResultRow> read_results_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open results file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto table = parse_csv(buffer.str());
  if (table.empty() || csv_row(table[0]) != std::string(kResultsHeader) + "\n")
    throw ParseError("results file has an unexpected header");

  std::vector<ResultRow> rows;
  rows.reserve(table.size() - 1);
  for (std::size_t r = 1; r < table.size(); ++r) {
    const auto& rec = table[r];
    if (rec.size() != 13)
      throw ParseError("results row " + std::to_string(r) + " is malformed");
    ResultRow row;
    row.run_id = std::stoull(rec[0]);
    row.dataset_label = rec[1];
    row.m = std::stoull(rec[2]);
    row.n_ind = std::stoll(rec[3]);
    row.n_atk = std::stoll(rec[4]);
    row.seed = std::stoull(rec[5]);
    row.epsilon = std::stod(rec[6]);
    row.abs_distance = std::stod(rec[7]);
    row.attack = rec[8];
    row.k = std::stoull(rec[9]);
    row.l = std::stoull(rec[10]);
    row.padding_g = std::stoi(rec[11]);
    row.accuracy = std::stod(rec[12]);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<AccuracyPoint> rows_to_points(const std::vector<ResultRow>& rows,
                                          const std::string& attack) {
  std::vector<AccuracyPoint> points;
  for (const ResultRow& row : rows) {
    if (row.attack != attack) continue;
    AccuracyPoint pt;
    pt.epsilon = row.epsilon;
    pt.n_ind = row.n_ind;
    pt.n_atk = row.n_atk;
    pt.accuracy = row.accuracy;
    pt.attack = row.attack;
    pt.seed = row.seed;
    pt.scored_queries = static_cast<std::int64_t>(row.l) -
                        static_cast<std::int64_t>(row.k);
    points.push_back(std::move(pt));
  }
  return points;
}

std::vector<AttackFitReport> fit_reports(const std::vector<ResultRow>& rows,
                                         const FitReportOptions& options) {
  if (options.mode != "average" && options.mode != "quantile")
    throw ConfigError("fit mode must be \"average\" or \"quantile\"");

  std::vector<std::string> attack_order;
  for (const ResultRow& row : rows)
    if (std::find(attack_order.begin(), attack_order.end(), row.attack) ==
        attack_order.end())
      attack_order.push_back(row.attack);
  if (attack_order.empty())
    throw InsufficientDataError("results contain no rows");

  std::vector<AttackFitReport> reports;
  for (const std::string& attack : attack_order) {
    const auto points = rows_to_points(rows, attack);
    if (points.size() < 10)
      throw InsufficientDataError("attack " + attack + " has only " +
                                  std::to_string(points.size()) +
                                  " rows, need >= 10");
    AttackFitReport report;
    report.attack = attack;
    report.mode = options.mode;
    report.rows_used = points.size();
    if (options.mode == "average") {
      report.linear = fit_accuracy_function(points);
    } else {
      report.quantile = fit_quantile_bound(points, options.alpha);
      for (double beta : options.beta_max)
        for (const auto& bound : options.n_atk_bounds) {
          NMaxEntry entry;
          entry.beta_max = beta;
          entry.n_atk_bound = bound;
          try {
            entry.n_max = max_index_size(report.quantile, beta, bound);
            entry.finite = true;
          } catch (const NoFiniteBoundError&) {
            entry.n_max = -1;
            entry.finite = false;
          }
          report.n_max.push_back(entry);
        }
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

void write_fit_report_json(const std::string& path,
                           const std::vector<AttackFitReport>& reports,
                           const FitReportOptions& options) {
  json doc;
  doc["mode"] = options.mode;
  if (options.mode == "quantile") doc["alpha"] = options.alpha;
  auto attacks = json::array();
  for (const AttackFitReport& report : reports) {
    json entry;
    entry["attack"] = report.attack;
    entry["rows_used"] = report.rows_used;
    if (report.mode == "average") {
      entry["fit"] = {{"a", report.linear.a},       {"b", report.linear.b},
                      {"se_a", report.linear.se_a}, {"se_b", report.linear.se_b},
                      {"r2", report.linear.r2},
                      {"n_points", report.linear.n_points}};
    } else {
      entry["fit"] = {{"a", report.quantile.a},
                      {"b", report.quantile.b},
                      {"alpha", report.quantile.alpha},
                      {"pinball_loss", report.quantile.pinball_loss}};
      auto bounds = json::array();
      for (const NMaxEntry& nm : report.n_max) {
        json row;
        row["beta_max"] = nm.beta_max;
        if (nm.n_atk_bound)
          row["n_atk_bound"] = *nm.n_atk_bound;
        else
          row["n_atk_bound"] = nullptr;
        row["finite"] = nm.finite;
        if (nm.finite) row["n_max"] = nm.n_max;
        bounds.push_back(std::move(row));
      }
      entry["n_max"] = std::move(bounds);
    }
    attacks.push_back(std::move(entry));
  }
  doc["attacks"] = std::move(attacks);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write fit report: " + path);
  out << doc.dump(2) << '\n';
}

namespace {

std::string safe_name(const std::string& name) {
  std::string out;
  for (char c : name)
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return out;
}

}  // namespace

void write_fit_svgs(const std::string& dir,
                    const std::vector<ResultRow>& rows,
                    const std::vector<AttackFitReport>& reports) {
  std::filesystem::create_directories(dir);
  for (const AttackFitReport& report : reports) {
    const auto points = rows_to_points(rows, report.attack);
    SvgPlot plot;
    SvgSeries scatter;
    scatter.label = report.attack;
    SvgSeries curve;
    curve.as_line = true;
    curve.color = "#d62728";

    if (report.mode == "average") {
      plot.title = "Accuracy vs similarity (" + report.attack + ")";
      plot.x_label = "epsilon";
      plot.y_label = "accuracy";
      double min_x = 0.0, max_x = 0.0;
      bool first = true;
      for (const AccuracyPoint& pt : points) {
        if (pt.epsilon <= 0.0) continue;
        scatter.points.emplace_back(pt.epsilon, pt.accuracy);
        min_x = first ? pt.epsilon : std::min(min_x, pt.epsilon);
        max_x = first ? pt.epsilon : std::max(max_x, pt.epsilon);
        first = false;
      }
      curve.label = "average fit";
      if (!first && max_x > min_x) {
        for (int i = 0; i <= 100; ++i) {
          const double x = min_x * std::pow(max_x / min_x, i / 100.0);
          curve.points.emplace_back(x, f_acc(report.linear, x));
        }
      }
      plot.series = {scatter, curve};
      write_svg(plot, dir + "/accuracy_vs_epsilon_" +
                          safe_name(report.attack) + ".svg");
    } else {
      plot.title = "Accuracy bound vs dataset sizes (" + report.attack + ")";
      plot.x_label = "sqrt(1/n_ind + 1/n_atk)";
      plot.y_label = "accuracy";
      double min_x = 0.0, max_x = 0.0;
      bool first = true;
      for (const AccuracyPoint& pt : points) {
        const double x = std::exp(size_regressor(pt.n_ind, pt.n_atk));
        scatter.points.emplace_back(x, pt.accuracy);
        min_x = first ? x : std::min(min_x, x);
        max_x = first ? x : std::max(max_x, x);
        first = false;
      }
      curve.label = "quantile bound";
      if (!first && max_x > min_x) {
        for (int i = 0; i <= 100; ++i) {
          const double x = min_x + (max_x - min_x) * i / 100.0;
          curve.points.emplace_back(
              x, expit(report.quantile.b * std::log(x) + report.quantile.a));
        }
      }
      plot.series = {scatter, curve};
      write_svg(plot, dir + "/accuracy_bound_" + safe_name(report.attack) +
                          ".svg");
    }
  }
}

ShiftReportResult shift_report(const Corpus& corpus,
                               const ShiftOptions& options) {
  const std::size_t m = corpus.m();
  const std::size_t l_eff = options.l == 0 ? m : options.l;
  if (l_eff > m) throw ConfigError("l exceeds m");
  if (options.k > l_eff) throw ConfigError("k exceeds l");

  ShiftReportResult result;
  auto evaluate = [&](const SplitPair& pair, std::uint64_t seed) {
    ShiftRow row;
    row.seed = seed;
    row.n_atk = static_cast<std::int64_t>(pair.atk.size());
    row.n_ind = static_cast<std::int64_t>(pair.ind.size());
    const CoocMatrix c_atk = cooccurrence_matrix(pair.atk);
    const CoocMatrix c_ind = cooccurrence_matrix(pair.ind);
    const auto [epsilon, abs_distance] = similarity_metrics(c_ind, c_atk);
    row.epsilon = epsilon;
    row.abs_distance = abs_distance;
    row.corrected_pvalue = bonferroni_coprob_test(c_ind, c_atk).corrected;

    const SimulatedIndex index =
        build_index(pair.ind, derive_seed(seed, 1), options.padding_g);
    auto [view, truth] = observe_queries(index, l_eff, derive_seed(seed, 2));
    view = select_known_queries(view, truth, options.k, derive_seed(seed, 3));
    const Prediction pred =
        run_attack(options.attack, view, c_atk, derive_seed(seed, 4));
    row.accuracy = accuracy(pred, truth, true);
    return row;
  };

  std::size_t unit = 0;
  for (std::int64_t cutoff : options.cutoffs) {
    const std::uint64_t seed = derive_seed(options.master_seed, unit++);
    ShiftRow row = evaluate(split_temporal(corpus, cutoff), seed);
    row.mode = "temporal";
    row.cutoff = cutoff;
    result.temporal.push_back(std::move(row));
  }

  const std::size_t half = corpus.size() / 2;
  for (std::size_t r = 0; r < options.uniform_reps; ++r) {
    const std::uint64_t seed = derive_seed(options.master_seed, unit++);
    ShiftRow row = evaluate(
        split_uniform(corpus, half, corpus.size() - half,
                      derive_seed(seed, 0)),
        seed);
    row.mode = "uniform";
    result.uniform.push_back(std::move(row));
  }

  auto summarize = [](const std::vector<ShiftRow>& rows, auto field) {
    ShiftSummary s;
    if (rows.empty()) return s;
    s.min = s.max = field(rows[0]);
    for (const ShiftRow& row : rows) {
      const double v = field(row);
      s.avg += v;
      s.min = std::min(s.min, v);
      s.max = std::max(s.max, v);
    }
    s.avg /= static_cast<double>(rows.size());
    return s;
  };
  result.epsilon =
      summarize(result.uniform, [](const ShiftRow& r) { return r.epsilon; });
  result.accuracy =
      summarize(result.uniform, [](const ShiftRow& r) { return r.accuracy; });
  result.corrected_pvalue = summarize(
      result.uniform, [](const ShiftRow& r) { return r.corrected_pvalue; });
  return result;
}

void write_shift_outputs(const std::string& dir,
                         const ShiftReportResult& result) {
  std::filesystem::create_directories(dir);

  auto row_json = [](const ShiftRow& row) {
    json j;
    j["mode"] = row.mode;
    if (row.mode == "temporal") j["cutoff"] = row.cutoff;
    j["seed"] = row.seed;
    j["n_atk"] = row.n_atk;
    j["n_ind"] = row.n_ind;
    j["epsilon"] = row.epsilon;
    j["abs_distance"] = row.abs_distance;
    j["accuracy"] = row.accuracy;
    j["corrected_pvalue"] = row.corrected_pvalue;
    return j;
  };

  json doc;
  doc["temporal"] = json::array();
  for (const ShiftRow& row : result.temporal)
    doc["temporal"].push_back(row_json(row));
  doc["uniform"] = json::array();
  for (const ShiftRow& row : result.uniform)
    doc["uniform"].push_back(row_json(row));
  doc["uniform_summary"] = {
      {"epsilon",
       {{"avg", result.epsilon.avg},
        {"min", result.epsilon.min},
        {"max", result.epsilon.max}}},
      {"accuracy",
       {{"avg", result.accuracy.avg},
        {"min", result.accuracy.min},
        {"max", result.accuracy.max}}},
      {"corrected_pvalue",
       {{"avg", result.corrected_pvalue.avg},
        {"min", result.corrected_pvalue.min},
        {"max", result.corrected_pvalue.max}}}};

  std::ofstream out(dir + "/shift_report.json", std::ios::binary);
  if (!out) throw IoError("cannot write shift report JSON");
  out << doc.dump(2) << '\n';

  std::ofstream csv(dir + "/shift_report.csv", std::ios::binary);
  if (!csv) throw IoError("cannot write shift report CSV");
  csv << "mode,cutoff,seed,n_atk,n_ind,epsilon,abs_distance,accuracy,"
         "corrected_pvalue\n";
  auto write_row = [&](const ShiftRow& row) {
    csv << csv_row({row.mode,
                    row.mode == "temporal" ? std::to_string(row.cutoff) : "",
                    std::to_string(row.seed), std::to_string(row.n_atk),
                    std::to_string(row.n_ind), format_double(row.epsilon),
                    format_double(row.abs_distance),
                    format_double(row.accuracy),
                    format_double(row.corrected_pvalue)});
  };
  for (const ShiftRow& row : result.temporal) write_row(row);
  for (const ShiftRow& row : result.uniform) write_row(row);
}

}  // namespace leakstat
