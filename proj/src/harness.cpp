#include <charconv>
#include <chrono>
#include <exception>

#include <omp.h>

#include "lpleak/csv.hpp"
#include "lpleak/error.hpp"
#include "lpleak/harness.hpp"

namespace lpleak {
namespace {

const CsvRow kRecordHeader{"network",   "category",     "predictor",  "rho",        "seed",
                           "lambda_star", "auc_star",   "lambda_prime", "auc_prime", "loss_ratio",
                           "wall_time", "status",       "error_code", "error_message", "config_hash",
                           "grid",      "test_curve",   "validation_curve"};

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += format_double(v[i]);
  }
  return out;
}

double to_double(const std::string& s, std::size_t row) {
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("records: bad number '" + s + "'", row);
  return x;
}

std::uint64_t to_u64(const std::string& s, std::size_t row) {
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("records: bad integer '" + s + "'", row);
  return x;
}

std::vector<double> split_doubles(const std::string& s, std::size_t row) {
  std::vector<double> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(';', start);
    out.push_back(to_double(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start), row));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string error_code(Error::Kind k) {
  switch (k) {
    case Error::Kind::argument:
      return "argument";
    case Error::Kind::data:
      return "data";
    case Error::Kind::numerical:
      return "numerical";
  }
  return "internal";
}

RunRecord blank_record(const LoadedDataset& data, const HyperGrid& grid, double rho, std::uint64_t seed) {
  RunRecord r;
  r.network = data.spec.name;
  r.category = data.spec.category;
  r.predictor = grid.predictor();
  r.rho = rho;
  r.seed = seed;
  r.grid.assign(grid.values().begin(), grid.values().end());
  return r;
}

void fill(RunRecord& r, const LoadedDataset& data, const HyperGrid& grid, const ExperimentConfig& cfg) {
  const Graph& g = data.graph;
  const SplitBundle bundle = nested_split(g, r.rho, r.seed);
  const NegativeSample negatives = draw_negatives(g, bundle, r.seed);
  EvalOptions opts;
  opts.scoring.deepwalk = cfg.deepwalk;
  opts.auc = cfg.auc;
  opts.retrain_prime = cfg.retrain_prime;
  const ProtocolResult p = evaluate_protocols(g, bundle, grid, negatives, r.seed, opts);
  r.lambda_star = p.lambda_star;
  r.auc_star = p.auc_star;
  r.lambda_prime = p.lambda_prime;
  r.auc_prime = p.auc_prime;
  r.loss_ratio = p.loss_ratio;
  r.test_curve = p.test_curve.auc;
  r.validation_curve = p.validation_curve.auc;
}

// Runs one record, turning any exception into a failed record.
RunRecord guarded_run(const LoadedDataset& data, const HyperGrid& grid, double rho, std::uint64_t seed,
                      const ExperimentConfig& cfg, const std::string& hash, const RunHook& hook) {
  RunRecord r = blank_record(data, grid, rho, seed);
  r.config_hash = hash;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if (hook) hook(r);
    fill(r, data, grid, cfg);
  } catch (const Error& e) {
    r.ok = false;
    r.error_code = error_code(e.kind());
    r.error_message = e.what();
  } catch (const std::exception& e) {
    r.ok = false;
    r.error_code = "internal";
    r.error_message = e.what();
  }
  if (!r.ok) {
    r.lambda_star = r.auc_star = r.lambda_prime = r.auc_prime = r.loss_ratio = 0.0;
    r.test_curve.clear();
    r.validation_curve.clear();
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

bool RunRecord::same_outcome(const RunRecord& o) const {
  return network == o.network && category == o.category && predictor == o.predictor && rho == o.rho &&
         seed == o.seed && lambda_star == o.lambda_star && auc_star == o.auc_star &&
         lambda_prime == o.lambda_prime && auc_prime == o.auc_prime && loss_ratio == o.loss_ratio && ok == o.ok &&
         error_code == o.error_code && error_message == o.error_message && config_hash == o.config_hash &&
         grid == o.grid && test_curve == o.test_curve && validation_curve == o.validation_curve;
}

std::vector<LoadedDataset> load_datasets(const ExperimentConfig& cfg) {
  std::vector<LoadedDataset> out;
  for (const DatasetSpec& d : cfg.datasets) {
    try {
      out.push_back({d, read_edge_list(d.path)});
    } catch (const ParseError& e) {
      throw ConfigError("dataset '" + d.name + "': " + e.what());
    }
  }
  return out;
}

RunRecord run_one(const LoadedDataset& data, const HyperGrid& grid, double rho, std::uint64_t seed,
                  const ExperimentConfig& cfg) {
  return guarded_run(data, grid, rho, seed, cfg, config_hash(cfg), {});
}

std::vector<RunRecord> run_matrix(const ExperimentConfig& cfg, const RunHook& hook) {
  validate(cfg);
  return run_matrix(cfg, load_datasets(cfg), hook);
}

std::vector<RunRecord> run_matrix(const ExperimentConfig& cfg, const std::vector<LoadedDataset>& data,
                                  const RunHook& hook) {
  validate(cfg);
  struct Job {
    std::size_t dataset, predictor, rho, seed;
  };
  std::vector<Job> jobs;
  for (std::size_t d = 0; d < data.size(); ++d)
    for (std::size_t p = 0; p < cfg.predictors.size(); ++p)
      for (std::size_t r = 0; r < cfg.rhos.size(); ++r)
        for (std::size_t s = 0; s < cfg.seeds.size(); ++s) jobs.push_back({d, p, r, s});

  const std::string hash = config_hash(cfg);
  std::vector<RunRecord> records(jobs.size());
  const std::ptrdiff_t count = std::ptrdiff_t(jobs.size());
  const int threads = cfg.jobs ? int(cfg.jobs) : 0;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads ? threads : omp_get_max_threads()) \
    if (threads != 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const Job& j = jobs[std::size_t(i)];
    records[std::size_t(i)] = guarded_run(data[j.dataset], cfg.predictors[j.predictor], cfg.rhos[j.rho],
                                          cfg.seeds[j.seed], cfg, hash, hook);
  }
  return records;
}

std::string format_records(const std::vector<RunRecord>& records) {
  std::string out = csv_line(kRecordHeader);
  for (const RunRecord& r : records) {
    out += csv_line({r.network, r.category, std::string(name(r.predictor)), format_double(r.rho),
                     std::to_string(r.seed), format_double(r.lambda_star), format_double(r.auc_star),
                     format_double(r.lambda_prime), format_double(r.auc_prime), format_double(r.loss_ratio),
                     format_double(r.wall_time), r.ok ? "ok" : "failed", r.error_code, r.error_message,
                     r.config_hash, join(r.grid), join(r.test_curve), join(r.validation_curve)});
  }
  return out;
}

std::vector<RunRecord> parse_records(std::string_view text) {
  const auto rows = parse_csv(text);
  if (rows.empty() || rows[0] != kRecordHeader) throw ParseError("records: missing or unexpected header", 1);
  std::vector<RunRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const CsvRow& row = rows[i];
    const std::size_t line = i + 1;
    if (row.size() != kRecordHeader.size()) throw ParseError("records: wrong column count", line);
    RunRecord r;
    r.network = row[0];
    r.category = row[1];
    auto id = parse_predictor(row[2]);
    if (!id) throw ParseError("records: unknown predictor '" + row[2] + "'", line);
    r.predictor = *id;
    r.rho = to_double(row[3], line);
    r.seed = to_u64(row[4], line);
    r.lambda_star = to_double(row[5], line);
    r.auc_star = to_double(row[6], line);
    r.lambda_prime = to_double(row[7], line);
    r.auc_prime = to_double(row[8], line);
    r.loss_ratio = to_double(row[9], line);
    r.wall_time = to_double(row[10], line);
    if (row[11] != "ok" && row[11] != "failed") throw ParseError("records: bad status '" + row[11] + "'", line);
    r.ok = row[11] == "ok";
    r.error_code = row[12];
    r.error_message = row[13];
    r.config_hash = row[14];
    r.grid = split_doubles(row[15], line);
    r.test_curve = split_doubles(row[16], line);
    r.validation_curve = split_doubles(row[17], line);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_curves(const std::vector<RunRecord>& records) {
  std::string out = csv_line({"network", "predictor", "rho", "seed", "protocol", "lambda", "auc"});
  for (const RunRecord& r : records) {
    if (!r.ok) continue;
    auto emit = [&](const char* protocol, const std::vector<double>& curve) {
      for (std::size_t k = 0; k < curve.size() && k < r.grid.size(); ++k)
        out += csv_line({r.network, std::string(name(r.predictor)), format_double(r.rho), std::to_string(r.seed),
                         protocol, format_double(r.grid[k]), format_double(curve[k])});
    };
    emit("test", r.test_curve);
    emit("validation", r.validation_curve);
  }
  return out;
}

}  // namespace lpleak
