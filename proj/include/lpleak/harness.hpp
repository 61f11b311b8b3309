#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lpleak/evaluation.hpp"

namespace lpleak {

struct DatasetSpec {
  std::string path;
  std::string name;
  std::string category;
};

/// One experiment matrix. Read from JSON:
///
///   {
///     "datasets":   [{"path": "jazz.txt", "name": "arenas-jazz", "category": "Soc"}],
///     "predictors": ["lp", {"id": "katz", "grid": "0.05:0.95:0.1"}, {"id": "lrw", "grid": [1, 2, 3]}],
///     "rhos":       [0.1, 0.2],
///     "seeds":      10,                 // or an explicit list
///     "categories": ["Soc", "Ani", "Trans", "Tech", "Bio", "Info"],
///     "table_rho":  0.2,
///     "auc":        {"exact_max_comparisons": 10000000, "samples": 100000},
///     "deepwalk":   {"walks_per_node": 10, "walk_length": 40, "window": 5,
///                    "negatives": 5, "epochs": 5, "learning_rate": 0.025, "score": "dot"},
///     "retrain_prime": true,
///     "output_dir": "out",
///     "jobs": 0
///   }
///
/// Every key is optional except "datasets". Relative dataset paths resolve
/// against the config file's directory.
struct ExperimentConfig {
  std::vector<DatasetSpec> datasets;
  std::vector<HyperGrid> predictors;
  std::vector<double> rhos;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> categories;
  double table_rho = 0.2;
  AucPolicy auc;
  DeepWalkConfig deepwalk;
  bool retrain_prime = true;
  std::string output_dir = "lpleak-out";
  std::size_t jobs = 0;  ///< 0: OpenMP default

  /// Nine predictors at default grids, ρ ∈ {0.1, 0.15, …, 0.5}, seeds 1..10,
  /// categories Soc, Ani, Trans, Tech, Bio, Info, no datasets.
  static ExperimentConfig defaults();
};

ExperimentConfig parse_config(std::string_view json_text, const std::string& base_dir = ".");
ExperimentConfig load_config(const std::string& path);

/// Throws ConfigError on ρ outside (0,1), undeclared categories, duplicate
/// dataset names, empty predictor/seed/ρ lists.
void validate(const ExperimentConfig& cfg);

/// Normalized JSON of every field that affects results.
std::string config_json(const ExperimentConfig& cfg);
/// 16-hex-digit FNV-1a hash of config_json.
std::string config_hash(const ExperimentConfig& cfg);

struct RunRecord {
  std::string network;
  std::string category;
  PredictorId predictor = PredictorId::lp;
  double rho = 0.0;
  std::uint64_t seed = 0;
  double lambda_star = 0.0;
  double auc_star = 0.0;
  double lambda_prime = 0.0;
  double auc_prime = 0.0;
  double loss_ratio = 0.0;
  double wall_time = 0.0;  ///< seconds
  bool ok = true;
  std::string error_code;  ///< argument | data | numerical | internal
  std::string error_message;
  std::string config_hash;
  std::vector<double> grid;
  std::vector<double> test_curve;        ///< AUC on E_P, model trained on E_T'
  std::vector<double> validation_curve;  ///< AUC on E_V, model trained on E_T

  /// Equality on everything except wall_time.
  bool same_outcome(const RunRecord& other) const;
};

struct LoadedDataset {
  DatasetSpec spec;
  Graph graph;
};

/// Reads every dataset up front; throws ConfigError if any is unreadable.
std::vector<LoadedDataset> load_datasets(const ExperimentConfig& cfg);

/// Called at the start of every run; an exception thrown here marks that
/// record failed. Used to exercise failure isolation.
using RunHook = std::function<void(const RunRecord&)>;

/// One record per (dataset × predictor × ρ × seed), in that nesting order.
/// Every predictor sees the same split and negatives for a given
/// (dataset, ρ, seed).
std::vector<RunRecord> run_matrix(const ExperimentConfig& cfg, const RunHook& hook = {});
std::vector<RunRecord> run_matrix(const ExperimentConfig& cfg, const std::vector<LoadedDataset>& data,
                                  const RunHook& hook = {});

/// A single run, as executed by run_matrix.
RunRecord run_one(const LoadedDataset& data, const HyperGrid& grid, double rho, std::uint64_t seed,
                  const ExperimentConfig& cfg);

/// records.csv: one row per record, doubles at round-trip precision.
std::string format_records(const std::vector<RunRecord>& records);
std::vector<RunRecord> parse_records(std::string_view csv_text);
/// "lambda,protocol,auc" rows of every record's two curves.
std::string format_curves(const std::vector<RunRecord>& records);

struct Aggregates {
  std::string config_hash;
  double table_rho = 0.0;
  std::vector<PredictorId> predictors;  ///< table rows
  std::vector<std::string> categories;  ///< table columns (non-empty ones)
  std::vector<std::string> omitted_categories;
  std::vector<std::vector<double>> cell_mean;  ///< [predictor][category]; NaN if empty
  std::vector<std::vector<double>> cell_std;   ///< pooled std over runs in the cell
  std::vector<double> algo_avg;                ///< per predictor, over its cells
  std::vector<double> net_avg;                 ///< per category, over its cells
  double grand_mean = 0.0;

  std::vector<double> rhos;
  std::vector<std::vector<double>> loss_by_rho;        ///< [predictor][rho]
  std::vector<std::string> curve_categories;           ///< rows of category_by_rho
  std::vector<std::vector<double>> category_by_rho;    ///< [category][rho]
  std::vector<std::vector<double>> auc_star_by_rho;    ///< [predictor][rho]
  std::vector<std::vector<double>> auc_prime_by_rho;   ///< [predictor][rho]
  std::vector<double> mean_auc_star_by_rho;            ///< over predictors
  std::vector<double> mean_auc_prime_by_rho;

  std::vector<std::uint64_t> seeds;
  std::size_t succeeded = 0;
  std::size_t failed = 0;
};

/// Means per network over seeds first, then over networks. Table cells use
/// records at `table_rho` (or the closest ρ present). `categories` fixes the
/// column order; categories seen in records but not listed are appended.
/// Throws ArgumentError when no record succeeded.
Aggregates aggregate(const std::vector<RunRecord>& records, double table_rho = 0.2,
                     const std::vector<std::string>& categories = {});

/// Writes loss_table.csv, loss_table.md, loss_table_std.csv, loss_by_rho.csv,
/// loss_by_category.csv, auc_by_rho.csv and manifest.json into `out_dir`.
/// `config` (normalized JSON, may be empty) is copied into the manifest.
/// Returns the written paths. Throws ConfigError if the directory is unwritable.
std::vector<std::string> emit_reports(const Aggregates& agg, const std::string& out_dir,
                                      const std::string& config = {});

/// Markdown loss table: percentages at two decimals, Algo Avg. and Net Avg. marginals.
std::string format_loss_table_markdown(const Aggregates& agg);

}  // namespace lpleak
