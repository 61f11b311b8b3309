#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lpleak/error.hpp"
#include "lpleak/harness.hpp"

namespace lpleak {
namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

void check_keys(const json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (auto a : allowed) ok = ok || it.key() == a;
    if (!ok) throw ConfigError(where + ": unknown key '" + it.key() + "'");
  }
}

HyperGrid parse_predictor_entry(const json& p) {
  auto id_of = [](const std::string& s) {
    auto id = parse_predictor(s);
    if (!id) throw ConfigError("unknown predictor '" + s + "'");
    return *id;
  };
  if (p.is_string()) return HyperGrid::defaults(id_of(p.get<std::string>()));
  if (!p.is_object() || !p.contains("id")) throw ConfigError("predictor entry needs an 'id'");
  check_keys(p, {"id", "grid"}, "predictor");
  const PredictorId id = id_of(p.at("id").get<std::string>());
  if (!p.contains("grid")) return HyperGrid::defaults(id);
  const json& g = p.at("grid");
  if (g.is_string()) return HyperGrid::parse(id, g.get<std::string>());
  if (g.is_array()) return {id, g.get<std::vector<double>>()};
  throw ConfigError("grid must be a string or an array");
}

DeepWalkConfig parse_deepwalk(const json& j) {
  check_keys(j, {"walks_per_node", "walk_length", "window", "negatives", "epochs", "learning_rate", "score"},
             "deepwalk");
  DeepWalkConfig d;
  d.walks_per_node = j.value("walks_per_node", d.walks_per_node);
  d.walk_length = j.value("walk_length", d.walk_length);
  d.window = j.value("window", d.window);
  d.negatives = j.value("negatives", d.negatives);
  d.epochs = j.value("epochs", d.epochs);
  d.learning_rate = j.value("learning_rate", d.learning_rate);
  const std::string score = j.value("score", std::string("dot"));
  if (score == "dot") d.score = EmbeddingScore::dot;
  else if (score == "cosine") d.score = EmbeddingScore::cosine;
  else throw ConfigError("deepwalk.score must be 'dot' or 'cosine'");
  return d;
}

}  // namespace

ExperimentConfig ExperimentConfig::defaults() {
  ExperimentConfig c;
  for (PredictorId id : benchmark_predictors()) c.predictors.push_back(HyperGrid::defaults(id));
  for (int i = 0; i <= 8; ++i) c.rhos.push_back(std::round((0.1 + 0.05 * i) * 1e12) / 1e12);
  for (std::uint64_t s = 1; s <= 10; ++s) c.seeds.push_back(s);
  c.categories = {"Soc", "Ani", "Trans", "Tech", "Bio", "Info"};
  return c;
}

ExperimentConfig parse_config(std::string_view text, const std::string& base_dir) {
  ExperimentConfig c = ExperimentConfig::defaults();
  try {
    const json j = json::parse(text, nullptr, true, true);
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    check_keys(j,
               {"datasets", "predictors", "rhos", "seeds", "categories", "table_rho", "auc", "deepwalk",
                "retrain_prime", "output_dir", "jobs"},
               "config");
    if (!j.contains("datasets") || !j.at("datasets").is_array()) throw ConfigError("config needs a 'datasets' array");
    for (const json& d : j.at("datasets")) {
      check_keys(d, {"path", "name", "category"}, "dataset");
      DatasetSpec s;
      s.path = d.at("path").get<std::string>();
      if (std::filesystem::path(s.path).is_relative()) s.path = (std::filesystem::path(base_dir) / s.path).string();
      s.name = d.value("name", std::filesystem::path(s.path).stem().string());
      s.category = d.value("category", std::string("Other"));
      c.datasets.push_back(std::move(s));
    }
    if (j.contains("predictors")) {
      c.predictors.clear();
      for (const json& p : j.at("predictors")) c.predictors.push_back(parse_predictor_entry(p));
    }
    if (j.contains("rhos")) c.rhos = j.at("rhos").get<std::vector<double>>();
    if (j.contains("seeds")) {
      const json& s = j.at("seeds");
      c.seeds.clear();
      if (s.is_number_unsigned() || s.is_number_integer()) {
        const auto n = s.get<std::int64_t>();
        for (std::int64_t i = 1; i <= n; ++i) c.seeds.push_back(std::uint64_t(i));
      } else {
        c.seeds = s.get<std::vector<std::uint64_t>>();
      }
    }
    if (j.contains("categories")) c.categories = j.at("categories").get<std::vector<std::string>>();
    c.table_rho = j.value("table_rho", c.table_rho);
    if (j.contains("auc")) {
      const json& a = j.at("auc");
      check_keys(a, {"exact_max_comparisons", "samples"}, "auc");
      c.auc.exact_max_comparisons = a.value("exact_max_comparisons", c.auc.exact_max_comparisons);
      c.auc.samples = a.value("samples", c.auc.samples);
    }
    if (j.contains("deepwalk")) c.deepwalk = parse_deepwalk(j.at("deepwalk"));
    c.retrain_prime = j.value("retrain_prime", c.retrain_prime);
    c.output_dir = j.value("output_dir", c.output_dir);
    c.jobs = j.value("jobs", c.jobs);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const ArgumentError& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  validate(c);
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::filesystem::path(path).parent_path().string());
}

void validate(const ExperimentConfig& c) {
  if (c.predictors.empty()) throw ConfigError("config: no predictors");
  if (c.rhos.empty()) throw ConfigError("config: no rho values");
  if (c.seeds.empty()) throw ConfigError("config: no seeds");
  for (double r : c.rhos)
    if (!(r > 0.0 && r < 1.0)) throw ConfigError("config: rho " + std::to_string(r) + " outside (0,1)");
  if (!(c.table_rho > 0.0 && c.table_rho < 1.0)) throw ConfigError("config: table_rho outside (0,1)");
  if (c.auc.samples == 0) throw ConfigError("config: auc.samples must be >= 1");
  std::set<std::string> names;
  for (const DatasetSpec& d : c.datasets) {
    if (!names.insert(d.name).second) throw ConfigError("config: duplicate dataset name '" + d.name + "'");
    if (!c.categories.empty() && std::find(c.categories.begin(), c.categories.end(), d.category) == c.categories.end())
      throw ConfigError("config: dataset '" + d.name + "' has undeclared category '" + d.category + "'");
  }
  std::set<PredictorId> ids;
  for (const HyperGrid& g : c.predictors)
    if (!ids.insert(g.predictor()).second)
      throw ConfigError("config: predictor '" + std::string(name(g.predictor())) + "' listed twice");
}

std::string config_json(const ExperimentConfig& c) {
  ordered j;
  j["datasets"] = ordered::array();
  for (const DatasetSpec& d : c.datasets)
    j["datasets"].push_back({{"path", d.path}, {"name", d.name}, {"category", d.category}});
  j["predictors"] = ordered::array();
  for (const HyperGrid& g : c.predictors) {
    std::vector<double> v(g.values().begin(), g.values().end());
    j["predictors"].push_back({{"id", std::string(name(g.predictor()))}, {"grid", v}});
  }
  j["rhos"] = c.rhos;
  j["seeds"] = c.seeds;
  j["categories"] = c.categories;
  j["table_rho"] = c.table_rho;
  j["auc"] = {{"exact_max_comparisons", c.auc.exact_max_comparisons}, {"samples", c.auc.samples}};
  const DeepWalkConfig& d = c.deepwalk;
  j["deepwalk"] = {{"walks_per_node", d.walks_per_node}, {"walk_length", d.walk_length}, {"window", d.window},
                   {"negatives", d.negatives},           {"epochs", d.epochs},           {"learning_rate", d.learning_rate},
                   {"score", d.score == EmbeddingScore::dot ? "dot" : "cosine"}};
  j["retrain_prime"] = c.retrain_prime;
  return j.dump();
}

std::string config_hash(const ExperimentConfig& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : config_json(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lpleak
