#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "leakstat/attacks.hpp"
#include "leakstat/corpus.hpp"
#include "leakstat/split.hpp"
#include "leakstat/stats.hpp"
#include "leakstat/synth.hpp"

namespace leakstat {

struct FileSource {
  std::string path;  // leakstat-corpus-v1 JSON
};
struct SynthSource {
  DocumentModel model;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};
struct IngestSource {
  std::string path;
  std::string format;  // "csv" | "dir"
  std::optional<std::string> stopwords_path;
  std::optional<std::string> signature_regex;
  std::size_t min_token_length = 3;
};
using CorpusSource = std::variant<FileSource, SynthSource, IngestSource>;

struct AttackSpec {
  std::string name;  // "score" | "refined_score" | "ihop"
  int ref_speed = 10;
  IhopParams ihop;
};

struct SizeGrid {
  std::vector<std::size_t> n_atk;
  std::vector<std::size_t> n_ind;
};

// Everything a sweep needs; all randomness flows from master_seed through
// derive_seed(master_seed, unit_index).
struct ExperimentConfig {
  std::string dataset_label;
  CorpusSource corpus;
  std::size_t m = 0;  // ingest only; file/synth sources carry their own width
  std::vector<AttackSpec> attacks;
  SplitMethod split = SplitMethod::uniform;
  std::vector<std::int64_t> cutoffs;  // temporal sweeps
  SizeGrid grid;                      // uniform sweeps
  std::size_t repetitions = 1;
  std::size_t k = 0;  // known queries
  std::size_t l = 0;  // observed queries; 0 = every keyword
  int padding_g = 1;
  std::uint64_t master_seed = 0;
  std::string output_dir = ".";
  unsigned threads = 0;  // 0 = hardware concurrency
};

ExperimentConfig parse_config_json(const std::string& text);
ExperimentConfig load_config(const std::string& path);
Corpus resolve_corpus(const ExperimentConfig& config);

struct ResultRow {
  std::size_t run_id = 0;
  std::string dataset_label;
  std::size_t m = 0;
  std::int64_t n_ind = 0;
  std::int64_t n_atk = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  double abs_distance = 0.0;
  std::string attack;
  std::size_t k = 0;
  std::size_t l = 0;
  int padding_g = 1;
  double accuracy = 0.0;
};

// One row per (grid point x repetition x attack), sorted by run_id;
// bit-identical across reruns and thread counts.
std::vector<ResultRow> run_sweep_rows(const ExperimentConfig& config,
                                      const Corpus& corpus);

// Resolves the corpus, runs the sweep, writes <output_dir>/results.csv, and
// returns that path.
std::string run_sweep(const ExperimentConfig& config);

void write_results_csv(const std::string& path,
                       const std::vector<ResultRow>& rows);
std::vector<ResultRow> read_results_csv(const std::string& path);

std::vector<AccuracyPoint> rows_to_points(const std::vector<ResultRow>& rows,
                                          const std::string& attack);

struct NMaxEntry {
  double beta_max = 0.0;
  std::optional<std::int64_t> n_atk_bound;  // nullopt = infinite
  std::int64_t n_max = -1;
  bool finite = false;
};

struct AttackFitReport {
  std::string attack;
  std::string mode;  // "average" | "quantile"
  LinearFit linear;
  QuantileFit quantile;
  std::vector<NMaxEntry> n_max;
  std::size_t rows_used = 0;
};

struct FitReportOptions {
  std::string mode = "average";
  double alpha = 0.95;  // quantile mode
  std::vector<double> beta_max;
  std::vector<std::optional<std::int64_t>> n_atk_bounds;
};

std::vector<AttackFitReport> fit_reports(const std::vector<ResultRow>& rows,
                                         const FitReportOptions& options);
void write_fit_report_json(const std::string& path,
                           const std::vector<AttackFitReport>& reports,
                           const FitReportOptions& options);
void write_fit_svgs(const std::string& dir,
                    const std::vector<ResultRow>& rows,
                    const std::vector<AttackFitReport>& reports);

struct ShiftOptions {
  std::vector<std::int64_t> cutoffs;
  std::size_t uniform_reps = 0;
  AttackSpec attack{"refined_score"};
  std::size_t k = 0;
  std::size_t l = 0;
  int padding_g = 1;
  std::uint64_t master_seed = 0;
};

struct ShiftRow {
  std::string mode;  // "temporal" | "uniform"
  std::int64_t cutoff = 0;  // temporal only
  std::uint64_t seed = 0;
  std::int64_t n_atk = 0;
  std::int64_t n_ind = 0;
  double epsilon = 0.0;
  double abs_distance = 0.0;
  double accuracy = 0.0;
  double corrected_pvalue = 0.0;
};

struct ShiftSummary {
  double avg = 0.0;
  double min = 0.0;
  double max = 0.0;
};

struct ShiftReportResult {
  std::vector<ShiftRow> temporal;
  std::vector<ShiftRow> uniform;
  ShiftSummary epsilon;
  ShiftSummary accuracy;
  ShiftSummary corrected_pvalue;
};

// Temporal splits per cutoff plus a uniform-split control, each scored with
// epsilon, attack accuracy, and the Bonferroni-corrected shift p-value.
ShiftReportResult shift_report(const Corpus& corpus,
                               const ShiftOptions& options);
void write_shift_outputs(const std::string& dir,
                         const ShiftReportResult& result);

}  // namespace leakstat
