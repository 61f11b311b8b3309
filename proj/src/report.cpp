#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "lpleak/csv.hpp"
#include "lpleak/error.hpp"
#include "lpleak/harness.hpp"

namespace lpleak {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Order-independent mean: values are sorted before summing.
double mean(std::vector<double> v) {
  if (v.empty()) return kNaN;
  std::sort(v.begin(), v.end());
  double s = 0.0;
  for (double x : v) s += x;
  return s / double(v.size());
}

double stddev(std::vector<double> v) {
  if (v.empty()) return kNaN;
  if (v.size() == 1) return 0.0;
  const double m = mean(v);
  const double n = double(v.size());
  for (double& x : v) x = (x - m) * (x - m);
  return std::sqrt(mean(std::move(v)) * n / (n - 1.0));
}

std::vector<double> finite(const std::vector<double>& v) {
  std::vector<double> out;
  for (double x : v)
    if (!std::isnan(x)) out.push_back(x);
  return out;
}

std::size_t rho_index(const std::vector<double>& rhos, double rho) {
  for (std::size_t i = 0; i < rhos.size(); ++i)
    if (std::abs(rhos[i] - rho) <= 1e-9) return i;
  return rhos.size();
}

std::string display_name(PredictorId id) {
  switch (id) {
    case PredictorId::katz:
      return "Katz";
    case PredictorId::lhn2:
      return "LHN-II";
    case PredictorId::deepwalk:
      return "DeepWalk";
    default: {
      std::string s(name(id));
      for (char& c : s) c = char(std::toupper(static_cast<unsigned char>(c)));
      return s;
    }
  }
}

std::string cell(double x) { return std::isnan(x) ? std::string() : format_double(x); }

std::string percent(double x) {
  if (std::isnan(x)) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", 100.0 * x);
  return buf;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw ConfigError("cannot write '" + p.string() + "'");
}

}  // namespace

Aggregates aggregate(const std::vector<RunRecord>& records, double table_rho,
                     const std::vector<std::string>& categories) {
  std::vector<const RunRecord*> ok;
  Aggregates a;
  std::set<std::uint64_t> seeds;
  std::set<std::string> hashes;
  for (const RunRecord& r : records) {
    seeds.insert(r.seed);
    hashes.insert(r.config_hash);
    if (r.ok) ok.push_back(&r);
  }
  a.succeeded = ok.size();
  a.failed = records.size() - ok.size();
  if (ok.empty()) throw ArgumentError("aggregate: no successful records");
  a.seeds.assign(seeds.begin(), seeds.end());
  a.config_hash = hashes.size() == 1 ? *hashes.begin() : std::string("mixed");

  for (const RunRecord* r : ok)
    if (rho_index(a.rhos, r->rho) == a.rhos.size()) a.rhos.push_back(r->rho);
  std::sort(a.rhos.begin(), a.rhos.end());
  std::size_t t = 0;
  for (std::size_t i = 1; i < a.rhos.size(); ++i)
    if (std::abs(a.rhos[i] - table_rho) < std::abs(a.rhos[t] - table_rho)) t = i;
  a.table_rho = a.rhos[t];

  std::set<PredictorId> present;
  for (const RunRecord* r : ok) present.insert(r->predictor);
  for (PredictorId id : benchmark_predictors())
    if (present.erase(id)) a.predictors.push_back(id);
  a.predictors.insert(a.predictors.end(), present.begin(), present.end());

  std::vector<std::string> order = categories;
  for (const RunRecord* r : ok)
    if (std::find(order.begin(), order.end(), r->category) == order.end()) order.push_back(r->category);

  // (predictor, network, rho) -> per-seed values.
  struct Runs {
    std::vector<double> loss, auc_star, auc_prime;
  };
  std::map<std::tuple<std::size_t, std::string, std::size_t>, Runs> runs;
  std::map<std::string, std::string> category_of;
  for (const RunRecord* r : ok) {
    const std::size_t p = std::size_t(std::find(a.predictors.begin(), a.predictors.end(), r->predictor) -
                                      a.predictors.begin());
    Runs& x = runs[{p, r->network, rho_index(a.rhos, r->rho)}];
    x.loss.push_back(r->loss_ratio);
    x.auc_star.push_back(r->auc_star);
    x.auc_prime.push_back(r->auc_prime);
    category_of[r->network] = r->category;
  }

  // Network-level means over seeds, collected per (predictor, category, rho).
  const std::size_t np = a.predictors.size(), nr = a.rhos.size();
  std::map<std::tuple<std::size_t, std::string, std::size_t>, std::vector<double>> by_category;
  std::map<std::tuple<std::size_t, std::string>, std::vector<double>> pooled;  // table rho, run level
  std::vector<std::vector<std::vector<double>>> loss_net(np, std::vector<std::vector<double>>(nr));
  auto star_net = loss_net, prime_net = loss_net;
  for (const auto& [key, x] : runs) {
    const auto& [p, network, r] = key;
    const std::string& c = category_of[network];
    by_category[{p, c, r}].push_back(mean(x.loss));
    loss_net[p][r].push_back(mean(x.loss));
    star_net[p][r].push_back(mean(x.auc_star));
    prime_net[p][r].push_back(mean(x.auc_prime));
    if (r == t) {
      auto& v = pooled[{p, c}];
      v.insert(v.end(), x.loss.begin(), x.loss.end());
    }
  }

  for (const std::string& c : order) {
    bool any = false;
    for (std::size_t p = 0; p < np; ++p) any = any || by_category.count({p, c, t});
    if (any) a.categories.push_back(c);
    else a.omitted_categories.push_back(c);
  }

  const std::size_t nc = a.categories.size();
  a.cell_mean.assign(np, std::vector<double>(nc, kNaN));
  a.cell_std = a.cell_mean;
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t c = 0; c < nc; ++c) {
      auto it = by_category.find({p, a.categories[c], t});
      if (it == by_category.end()) continue;
      a.cell_mean[p][c] = mean(it->second);
      a.cell_std[p][c] = stddev(pooled[{p, a.categories[c]}]);
    }
  std::vector<double> all_cells;
  for (std::size_t p = 0; p < np; ++p) {
    a.algo_avg.push_back(mean(finite(a.cell_mean[p])));
    for (double x : finite(a.cell_mean[p])) all_cells.push_back(x);
  }
  for (std::size_t c = 0; c < nc; ++c) {
    std::vector<double> col;
    for (std::size_t p = 0; p < np; ++p) col.push_back(a.cell_mean[p][c]);
    a.net_avg.push_back(mean(finite(col)));
  }
  a.grand_mean = mean(all_cells);

  a.loss_by_rho.assign(np, std::vector<double>(nr, kNaN));
  a.auc_star_by_rho = a.auc_prime_by_rho = a.loss_by_rho;
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t r = 0; r < nr; ++r) {
      a.loss_by_rho[p][r] = mean(loss_net[p][r]);
      a.auc_star_by_rho[p][r] = mean(star_net[p][r]);
      a.auc_prime_by_rho[p][r] = mean(prime_net[p][r]);
    }
  for (std::size_t r = 0; r < nr; ++r) {
    std::vector<double> s, q;
    for (std::size_t p = 0; p < np; ++p) {
      s.push_back(a.auc_star_by_rho[p][r]);
      q.push_back(a.auc_prime_by_rho[p][r]);
    }
    a.mean_auc_star_by_rho.push_back(mean(finite(s)));
    a.mean_auc_prime_by_rho.push_back(mean(finite(q)));
  }
  for (const std::string& c : order) {
    std::vector<double> row;
    for (std::size_t r = 0; r < nr; ++r) {
      std::vector<double> v;
      for (std::size_t p = 0; p < np; ++p) {
        auto it = by_category.find({p, c, r});
        if (it != by_category.end()) v.push_back(mean(it->second));
      }
      row.push_back(mean(v));
    }
    if (finite(row).empty()) continue;
    a.curve_categories.push_back(c);
    a.category_by_rho.push_back(row);
  }
  return a;
}

std::string format_loss_table_markdown(const Aggregates& a) {
  std::string out = "| Algorithm |";
  for (const std::string& c : a.categories) out += " " + c + " |";
  out += " Algo Avg. |\n|---|";
  for (std::size_t c = 0; c <= a.categories.size(); ++c) out += "---:|";
  out += "\n";
  for (std::size_t p = 0; p < a.predictors.size(); ++p) {
    out += "| " + display_name(a.predictors[p]) + " |";
    for (double x : a.cell_mean[p]) out += " " + percent(x) + " |";
    out += " " + percent(a.algo_avg[p]) + " |\n";
  }
  out += "| Net Avg. |";
  for (double x : a.net_avg) out += " " + percent(x) + " |";
  out += " " + percent(a.grand_mean) + " |\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4g", a.table_rho);
  out += "\nMean loss ratio L at rho = " + std::string(buf) + ". Config hash `" + a.config_hash + "`.\n";
  return out;
}

std::vector<std::string> emit_reports(const Aggregates& a, const std::string& out_dir, const std::string& config) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec || !fs::is_directory(out_dir)) throw ConfigError("cannot create output directory '" + out_dir + "'");
  for (const std::string& c : a.omitted_categories)
    std::cerr << "warning: category '" << c << "' has no successful records; column omitted\n";

  const fs::path dir(out_dir);
  std::vector<std::string> written;
  auto emit = [&](const char* file, const std::string& text) {
    write_file(dir / file, text);
    written.push_back((dir / file).string());
  };

  auto table = [&](const std::vector<std::vector<double>>& cells, bool marginals) {
    CsvRow head{"predictor"};
    head.insert(head.end(), a.categories.begin(), a.categories.end());
    if (marginals) head.push_back("algo_avg");
    head.push_back("config_hash");
    std::string out = csv_line(head);
    for (std::size_t p = 0; p < a.predictors.size(); ++p) {
      CsvRow row{std::string(name(a.predictors[p]))};
      for (double x : cells[p]) row.push_back(cell(x));
      if (marginals) row.push_back(cell(a.algo_avg[p]));
      row.push_back(a.config_hash);
      out += csv_line(row);
    }
    if (marginals) {
      CsvRow row{"net_avg"};
      for (double x : a.net_avg) row.push_back(cell(x));
      row.push_back(cell(a.grand_mean));
      row.push_back(a.config_hash);
      out += csv_line(row);
    }
    return out;
  };
  emit("loss_table.csv", table(a.cell_mean, true));
  emit("loss_table_std.csv", table(a.cell_std, false));
  emit("loss_table.md", format_loss_table_markdown(a));

  std::string by_rho = csv_line({"predictor", "rho", "loss_ratio", "config_hash"});
  for (std::size_t p = 0; p < a.predictors.size(); ++p)
    for (std::size_t r = 0; r < a.rhos.size(); ++r)
      by_rho += csv_line({std::string(name(a.predictors[p])), format_double(a.rhos[r]), cell(a.loss_by_rho[p][r]),
                          a.config_hash});
  emit("loss_by_rho.csv", by_rho);

  std::string by_cat = csv_line({"category", "rho", "loss_ratio", "config_hash"});
  for (std::size_t c = 0; c < a.category_by_rho.size(); ++c)
    for (std::size_t r = 0; r < a.rhos.size(); ++r)
      by_cat += csv_line({a.curve_categories[c], format_double(a.rhos[r]), cell(a.category_by_rho[c][r]), a.config_hash});
  emit("loss_by_category.csv", by_cat);

  std::string auc = csv_line({"predictor", "rho", "auc_two_set", "auc_three_set", "config_hash"});
  for (std::size_t p = 0; p < a.predictors.size(); ++p)
    for (std::size_t r = 0; r < a.rhos.size(); ++r)
      auc += csv_line({std::string(name(a.predictors[p])), format_double(a.rhos[r]), cell(a.auc_star_by_rho[p][r]),
                       cell(a.auc_prime_by_rho[p][r]), a.config_hash});
  for (std::size_t r = 0; r < a.rhos.size(); ++r)
    auc += csv_line({"mean", format_double(a.rhos[r]), cell(a.mean_auc_star_by_rho[r]),
                     cell(a.mean_auc_prime_by_rho[r]), a.config_hash});
  emit("auc_by_rho.csv", auc);

  nlohmann::ordered_json m;
  m["config_hash"] = a.config_hash;
  m["seeds"] = a.seeds;
  m["rhos"] = a.rhos;
  m["table_rho"] = a.table_rho;
  std::vector<std::string> preds;
  for (PredictorId id : a.predictors) preds.emplace_back(name(id));
  m["predictors"] = preds;
  m["categories"] = a.categories;
  m["omitted_categories"] = a.omitted_categories;
  m["records"] = {{"succeeded", a.succeeded}, {"failed", a.failed}};
  m["aggregation"] = "per-network mean over seeds, then mean over networks; marginals are means of table cells";
  if (!config.empty()) m["config"] = nlohmann::ordered_json::parse(config);
  emit("manifest.json", m.dump(2) + "\n");
  return written;
}

}  // namespace lpleak
