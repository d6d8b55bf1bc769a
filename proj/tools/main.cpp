#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leakstat/corpus.hpp"
#include "leakstat/corpus_io.hpp"
#include "leakstat/errors.hpp"
#include "leakstat/rng.hpp"
#include "leakstat/runner.hpp"
#include "leakstat/stats.hpp"

using namespace leakstat;

namespace {

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  for (const std::string& item : split_list(csv)) out.push_back(std::stod(item));
  return out;
}

std::vector<std::optional<std::int64_t>> parse_bound_list(
    const std::string& csv) {
  std::vector<std::optional<std::int64_t>> out;
  for (const std::string& item : split_list(csv)) {
    if (item == "inf" || item == "infinite")
      out.push_back(std::nullopt);
    else
      out.push_back(std::stoll(item));
  }
  return out;
}

DocumentModel load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  // Reuse the config parser by wrapping the model in a minimal sweep config.
  nlohmann::json wrapper;
  wrapper["corpus"] = {{"source", "synth"},
                       {"model", nlohmann::json::parse(buffer.str())},
                       {"n", 0}};
  wrapper["attacks"] = {{{"name", "ihop"}}};
  wrapper["split"] = {{"method", "uniform"},
                      {"n_atk", {1}},
                      {"n_ind", {1}}};
  const ExperimentConfig config = parse_config_json(wrapper.dump());
  return std::get<SynthSource>(config.corpus).model;
}

int cmd_ingest(const std::string& input, const std::string& format,
               std::size_t m, const std::string& stopwords_path,
               const std::string& signature_regex, std::size_t min_token_len,
               const std::string& out) {
  std::vector<RawDocument> raws = format == "csv"
                                      ? load_raw_documents_csv(input)
                                      : load_raw_documents_dir(input);
  if (!signature_regex.empty()) apply_signature_filter(raws, signature_regex);
  const StopwordSet stopwords = stopwords_path.empty()
                                    ? english_stopwords()
                                    : load_stopwords(stopwords_path);
  TokenizerOptions tok;
  tok.min_token_length = min_token_len;
  auto universe = std::make_shared<KeywordUniverse>(
      build_universe(raws, m, stopwords, tok));
  const Corpus corpus = vectorize_all(raws, universe, stopwords, tok);
  save_corpus_json(corpus, out);
  std::printf("ingested %zu documents, m=%zu keywords -> %s\n", corpus.size(),
              corpus.m(), out.c_str());
  return 0;
}

int cmd_synth(const std::string& model_path, std::size_t n, std::uint64_t seed,
              const std::string& out) {
  const DocumentModel model = load_model_file(model_path);
  const Corpus corpus = sample_corpus(model, n, seed);
  save_corpus_json(corpus, out);
  std::printf("sampled %zu documents (m=%zu, rng=%s, seed=%llu) -> %s\n",
              corpus.size(), corpus.m(), kRngAlgorithm,
              static_cast<unsigned long long>(seed), out.c_str());
  return 0;
}

int cmd_sweep(const std::string& config_path) {
  const ExperimentConfig config = load_config(config_path);
  const std::string path = run_sweep(config);
  std::printf("results -> %s\n", path.c_str());
  return 0;
}

int cmd_fit(const std::string& results_path, const std::string& mode,
            double alpha, const std::string& beta_list,
            const std::string& bound_list, const std::string& out,
            const std::string& svg_dir) {
  const auto rows = read_results_csv(results_path);
  FitReportOptions options;
  options.mode = mode;
  options.alpha = alpha;
  options.beta_max = beta_list.empty() ? std::vector<double>{}
                                       : parse_double_list(beta_list);
  options.n_atk_bounds =
      bound_list.empty()
          ? std::vector<std::optional<std::int64_t>>{std::nullopt}
          : parse_bound_list(bound_list);
  const auto reports = fit_reports(rows, options);
  write_fit_report_json(out, reports, options);
  if (!svg_dir.empty()) write_fit_svgs(svg_dir, rows, reports);
  std::printf("fit report -> %s\n", out.c_str());
  return 0;
}

int cmd_maxsize(const std::string& fit_path, const std::string& attack,
                double a, double b, double alpha, bool have_ab,
                double beta_max, const std::string& bound) {
  QuantileFit fit;
  if (have_ab) {
    fit.a = a;
    fit.b = b;
    fit.alpha = alpha;
  } else {
    std::ifstream in(fit_path, std::ios::binary);
    if (!in) throw IoError("cannot open fit report: " + fit_path);
    nlohmann::json doc;
    in >> doc;
    bool found = false;
    for (const auto& entry : doc.at("attacks")) {
      if (!attack.empty() && entry.at("attack").get<std::string>() != attack)
        continue;
      const auto& f = entry.at("fit");
      if (!f.contains("alpha"))
        throw ConfigError("fit report is not a quantile report");
      fit.a = f.at("a").get<double>();
      fit.b = f.at("b").get<double>();
      fit.alpha = f.at("alpha").get<double>();
      found = true;
      break;
    }
    if (!found) throw ConfigError("attack not found in fit report");
  }
  const std::optional<std::int64_t> n_atk_bound =
      (bound == "inf" || bound.empty())
          ? std::nullopt
          : std::optional<std::int64_t>(std::stoll(bound));
  const std::int64_t n_max = max_index_size(fit, beta_max, n_atk_bound);
  std::printf("n_max=%lld\n", static_cast<long long>(n_max));
  return 0;
}

int cmd_shift_test(const std::string& corpus_path, const std::string& cutoffs,
                   std::size_t uniform_reps, const std::string& attack,
                   std::size_t k, std::size_t l, int padding_g,
                   std::uint64_t seed, const std::string& out_dir) {
  const Corpus corpus = load_corpus_json(corpus_path);
  ShiftOptions options;
  for (const std::string& c : split_list(cutoffs))
    options.cutoffs.push_back(std::stoll(c));
  options.uniform_reps = uniform_reps;
  options.attack.name = attack;
  options.k = k;
  options.l = l;
  options.padding_g = padding_g;
  options.master_seed = seed;
  const ShiftReportResult result = shift_report(corpus, options);
  write_shift_outputs(out_dir, result);
  std::printf("shift report -> %s/shift_report.json\n", out_dir.c_str());
  return 0;
}

int cmd_plot(const std::string& results_path, const std::string& mode,
             double alpha, const std::string& out_dir) {
  const auto rows = read_results_csv(results_path);
  FitReportOptions options;
  options.mode = mode;
  options.alpha = alpha;
  const auto reports = fit_reports(rows, options);
  write_fit_svgs(out_dir, rows, reports);
  std::printf("plots -> %s\n", out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leakage-abuse attack simulation and statistics workbench"};
  app.require_subcommand(1);

  auto* ingest =
      app.add_subcommand("ingest", "Parse raw documents into a corpus");
  std::string in_path, in_format = "csv", in_stopwords, in_regex,
              in_out = "corpus.json";
  std::size_t in_m = 0, in_minlen = 3;
  ingest->add_option("--input", in_path)->required();
  ingest->add_option("--format", in_format)
      ->check(CLI::IsMember({"csv", "dir"}));
  ingest->add_option("--m", in_m)->required();
  ingest->add_option("--stopwords", in_stopwords);
  ingest->add_option("--signature-regex", in_regex);
  ingest->add_option("--min-token-len", in_minlen);
  ingest->add_option("--out", in_out);

  auto* synth = app.add_subcommand("synth", "Sample a synthetic corpus");
  std::string sy_model, sy_out = "corpus.json";
  std::size_t sy_n = 0;
  std::uint64_t sy_seed = 0;
  synth->add_option("--model", sy_model)->required();
  synth->add_option("--n", sy_n)->required();
  synth->add_option("--seed", sy_seed);
  synth->add_option("--out", sy_out);

  auto* sweep = app.add_subcommand("sweep", "Run a seeded experiment sweep");
  std::string sw_config;
  sweep->add_option("--config", sw_config)->required();

  auto* fit = app.add_subcommand("fit", "Fit accuracy functions to results");
  std::string f_results, f_mode = "average", f_beta, f_bounds,
              f_out = "fit_report.json", f_svg;
  double f_alpha = 0.95;
  fit->add_option("--results", f_results)->required();
  fit->add_option("--mode", f_mode)
      ->check(CLI::IsMember({"average", "quantile"}));
  fit->add_option("--alpha", f_alpha);
  fit->add_option("--beta-max", f_beta);
  fit->add_option("--n-atk-bound", f_bounds);
  fit->add_option("--out", f_out);
  fit->add_option("--svg-dir", f_svg);

  auto* maxsize =
      app.add_subcommand("maxsize", "Maximum index size for a target accuracy");
  std::string mx_fit, mx_attack, mx_bound = "inf";
  double mx_a = 0.0, mx_b = 0.0, mx_alpha = 0.95, mx_beta = 0.05;
  auto* mx_fit_opt = maxsize->add_option("--fit", mx_fit);
  maxsize->add_option("--attack", mx_attack);
  auto* mx_a_opt = maxsize->add_option("--a", mx_a);
  maxsize->add_option("--b", mx_b);
  maxsize->add_option("--alpha", mx_alpha);
  maxsize->add_option("--beta-max", mx_beta);
  maxsize->add_option("--n-atk-bound", mx_bound);

  auto* shift = app.add_subcommand(
      "shift-test", "Temporal vs uniform distribution-shift tests");
  std::string sh_corpus, sh_cutoffs, sh_attack = "refined_score",
              sh_out = "shift_out";
  std::size_t sh_reps = 0, sh_k = 0, sh_l = 0;
  int sh_padding = 1;
  std::uint64_t sh_seed = 0;
  shift->add_option("--corpus", sh_corpus)->required();
  shift->add_option("--cutoffs", sh_cutoffs)->required();
  shift->add_option("--uniform-reps", sh_reps);
  shift->add_option("--attack", sh_attack)
      ->check(CLI::IsMember({"score", "refined_score", "ihop"}));
  shift->add_option("--k", sh_k);
  shift->add_option("--l", sh_l);
  shift->add_option("--padding-g", sh_padding);
  shift->add_option("--seed", sh_seed);
  shift->add_option("--out-dir", sh_out);

  auto* plot = app.add_subcommand("plot", "Render SVG plots from results");
  std::string p_results, p_mode = "average", p_out = "plots";
  double p_alpha = 0.95;
  plot->add_option("--results", p_results)->required();
  plot->add_option("--mode", p_mode)
      ->check(CLI::IsMember({"average", "quantile"}));
  plot->add_option("--alpha", p_alpha);
  plot->add_option("--out-dir", p_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*ingest)
      return cmd_ingest(in_path, in_format, in_m, in_stopwords, in_regex,
                        in_minlen, in_out);
    if (*synth) return cmd_synth(sy_model, sy_n, sy_seed, sy_out);
    if (*sweep) return cmd_sweep(sw_config);
    if (*fit)
      return cmd_fit(f_results, f_mode, f_alpha, f_beta, f_bounds, f_out,
                     f_svg);
    if (*maxsize)
      return cmd_maxsize(mx_fit, mx_attack, mx_a, mx_b, mx_alpha,
                         mx_fit_opt->count() == 0 && mx_a_opt->count() > 0,
                         mx_beta, mx_bound);
    if (*shift)
      return cmd_shift_test(sh_corpus, sh_cutoffs, sh_reps, sh_attack, sh_k,
                            sh_l, sh_padding, sh_seed, sh_out);
    if (*plot) return cmd_plot(p_results, p_mode, p_alpha, p_out);
  } catch (const Error& e) {
    nlohmann::json err{{"error", e.code()}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    nlohmann::json err{{"error", "internal"}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return 1;
  }
  return 0;
}
