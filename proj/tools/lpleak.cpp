// lpleak: command-line front end.
//
//   lpleak stats  <edgelist>
//   lpleak split  <edgelist> --rho 0.2 --seed 1 [--out DIR]
//   lpleak score  <edgelist> --predictor katz --param 0.5 --pairs pairs.txt
//   lpleak eval   <edgelist> --predictor lp --grid 0:0.05:0.001 --rho 0.2 --seed 1
//   lpleak run    --config exp.json [--out DIR] [--jobs N]
//   lpleak report --records records.csv [--out DIR]
//
// Exit status: 0 success, 1 usage, 2 data, 3 numerical.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lpleak/error.hpp"
#include "lpleak/harness.hpp"

using namespace lpleak;
using nlohmann::ordered_json;

namespace {

constexpr int kUsage = 1, kData = 2, kNumerical = 3;

bool g_json = false;

Graph load_graph(const std::string& path) {
  ParseReport report;
  Graph g = read_edge_list(path, &report);
  if (report.self_loops) std::cerr << "warning: dropped " << report.self_loops << " self-loop line(s)\n";
  if (report.duplicates) std::cerr << "warning: dropped " << report.duplicates << " duplicate edge(s)\n";
  return g;
}

PredictorId predictor_arg(const std::string& s) {
  auto id = parse_predictor(s);
  if (!id) throw ArgumentError("unknown predictor '" + s + "'");
  return *id;
}

std::string output_dir(const std::string& flag, const std::string& fallback) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("LPLEAK_OUTPUT_DIR"); env && *env) return env;
  return fallback;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw ConfigError("cannot write '" + path + "'");
}

PairList read_pairs(const Graph& g, const std::string& path) {
  std::unordered_map<std::string, NodeId> id;
  for (NodeId u = 0; u < g.node_count(); ++u) id.emplace(g.label(u), u);
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open pairs file '" + path + "'");
  PairList pairs;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.empty() || line[0] == '#' || line[0] == '%') continue;
    std::istringstream ss(line);
    std::string a, b;
    if (!(ss >> a)) continue;
    if (!(ss >> b)) throw ParseError("pair needs two node labels", n);
    auto ia = id.find(a), ib = id.find(b);
    if (ia == id.end() || ib == id.end()) throw ParseError("unknown node label", n);
    if (ia->second == ib->second) throw ParseError("pair of a node with itself", n);
    pairs.push_back({ia->second, ib->second});
  }
  return pairs;
}

void print_failures(const std::vector<RunRecord>& records) {
  for (const RunRecord& r : records)
    if (!r.ok)
      std::cerr << "failed: " << r.network << " " << name(r.predictor) << " rho=" << r.rho << " seed=" << r.seed
                << " [" << r.error_code << "] " << r.error_message << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Link-prediction leakage benchmark"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "Machine-readable output, one JSON record per line");

  std::string graph_path, out, grid_text, pairs_path, config_path, records_path, predictor;
  double rho = 0.2, param = 0.0, table_rho = 0.2;
  std::uint64_t seed = 1;
  std::size_t jobs = 0;
  bool no_retrain = false;

  auto* stats_cmd = app.add_subcommand("stats", "Print N, M, mean degree and density");
  stats_cmd->add_option("edgelist", graph_path)->required();

  auto* split_cmd = app.add_subcommand("split", "Nested split manifest; --out exports the parts");
  split_cmd->add_option("edgelist", graph_path)->required();
  split_cmd->add_option("--rho", rho)->required();
  split_cmd->add_option("--seed", seed)->required();
  split_cmd->add_option("--out", out);

  auto* score_cmd = app.add_subcommand("score", "Score node pairs with one predictor");
  score_cmd->add_option("edgelist", graph_path)->required();
  score_cmd->add_option("--predictor", predictor)->required();
  score_cmd->add_option("--param", param)->required();
  score_cmd->add_option("--pairs", pairs_path, "File of 'u v' label lines")->required();
  score_cmd->add_option("--seed", seed);

  auto* eval_cmd = app.add_subcommand("eval", "Two-set and three-set protocols on one split");
  eval_cmd->add_option("edgelist", graph_path)->required();
  eval_cmd->add_option("--predictor", predictor)->required();
  eval_cmd->add_option("--grid", grid_text, "start:stop:step or a,b,c (default: predictor default)");
  eval_cmd->add_option("--rho", rho)->required();
  eval_cmd->add_option("--seed", seed)->required();
  eval_cmd->add_option("--curves", out, "Directory for the two 'lambda auc' curve files");
  eval_cmd->add_flag("--no-retrain", no_retrain, "AUC' from the E_T-trained model");

  auto* run_cmd = app.add_subcommand("run", "Execute an experiment matrix");
  run_cmd->add_option("--config", config_path)->required();
  run_cmd->add_option("--out", out);
  run_cmd->add_option("--jobs", jobs, "Worker cap (0: all cores)");

  auto* report_cmd = app.add_subcommand("report", "Re-aggregate a records.csv");
  report_cmd->add_option("--records", records_path)->required();
  report_cmd->add_option("--out", out);
  report_cmd->add_option("--table-rho", table_rho);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*stats_cmd) {
      const GraphStats s = stats(load_graph(graph_path));
      if (g_json) {
        std::cout << ordered_json{{"n", s.n}, {"m", s.m}, {"mean_degree", s.mean_degree}, {"density", s.density}}.dump()
                  << "\n";
      } else {
        std::printf("N=%zu M=%zu k=%.2f r=%.4f\n", s.n, s.m, s.mean_degree, s.density);
      }
    } else if (*split_cmd) {
      const Graph g = load_graph(graph_path);
      const SplitBundle b = nested_split(g, rho, seed);
      if (!out.empty()) export_split(g, b, out);
      std::cout << (g_json ? ordered_json::parse(split_manifest(b)).dump() : split_manifest(b)) << "\n";
    } else if (*score_cmd) {
      const Graph g = load_graph(graph_path);
      const PairList pairs = read_pairs(g, pairs_path);
      const PairScores s = score_pairs(g, predictor_arg(predictor), param, pairs, seed);
      if (g_json) {
        for (std::size_t i = 0; i < pairs.size(); ++i)
          std::cout << ordered_json{{"u", g.label(pairs[i].u)}, {"v", g.label(pairs[i].v)}, {"score", s.scores[i]}}
                           .dump()
                    << "\n";
      } else {
        std::cout << format_scores(g, pairs, s.scores);
      }
    } else if (*eval_cmd) {
      const Graph g = load_graph(graph_path);
      const PredictorId id = predictor_arg(predictor);
      const HyperGrid grid = grid_text.empty() ? HyperGrid::defaults(id) : HyperGrid::parse(id, grid_text);
      const SplitBundle b = nested_split(g, rho, seed);
      const NegativeSample neg = draw_negatives(g, b, seed);
      EvalOptions opts;
      opts.retrain_prime = !no_retrain;
      const ProtocolResult r = evaluate_protocols(g, b, grid, neg, seed, opts);
      if (!out.empty()) {
        std::filesystem::create_directories(out);
        write_text(out + "/two_set.txt", format_curve(r.test_curve));
        write_text(out + "/three_set.txt", format_curve(r.validation_curve));
      }
      if (g_json) {
        std::cout << ordered_json{{"predictor", name(id)},        {"rho", rho},
                                  {"seed", seed},                 {"lambda_star", r.lambda_star},
                                  {"auc_star", r.auc_star},       {"lambda_prime", r.lambda_prime},
                                  {"auc_prime", r.auc_prime},     {"loss_ratio", r.loss_ratio}}
                         .dump()
                  << "\n";
      } else {
        std::printf("%s rho=%g seed=%llu lambda*=%.10g AUC*=%.6f lambda'=%.10g AUC'=%.6f L=%.6f\n",
                    std::string(name(id)).c_str(), rho, static_cast<unsigned long long>(seed), r.lambda_star,
                    r.auc_star, r.lambda_prime, r.auc_prime, r.loss_ratio);
      }
    } else if (*run_cmd) {
      ExperimentConfig cfg = load_config(config_path);
      if (jobs) cfg.jobs = jobs;
      const std::string dir = output_dir(out, cfg.output_dir);
      const std::vector<RunRecord> records = run_matrix(cfg);
      print_failures(records);
      std::filesystem::create_directories(dir);
      write_text(dir + "/records.csv", format_records(records));
      write_text(dir + "/curves.csv", format_curves(records));
      const Aggregates a = aggregate(records, cfg.table_rho, cfg.categories);
      emit_reports(a, dir, config_json(cfg));
      if (g_json) {
        for (const RunRecord& r : records)
          std::cout << ordered_json{{"network", r.network},     {"predictor", name(r.predictor)},
                                    {"rho", r.rho},             {"seed", r.seed},
                                    {"ok", r.ok},               {"auc_star", r.auc_star},
                                    {"auc_prime", r.auc_prime}, {"loss_ratio", r.loss_ratio}}
                           .dump()
                    << "\n";
      } else {
        std::cout << format_loss_table_markdown(a);
      }
    } else if (*report_cmd) {
      std::ifstream in(records_path, std::ios::binary);
      if (!in) throw ConfigError("cannot open records '" + records_path + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      const std::vector<RunRecord> records = parse_records(ss.str());
      print_failures(records);
      const Aggregates a = aggregate(records, table_rho);
      emit_reports(a, output_dir(out, "."));
      if (!g_json) std::cout << format_loss_table_markdown(a);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case Error::Kind::argument:
        return kUsage;
      case Error::Kind::data:
        return kData;
      case Error::Kind::numerical:
        return kNumerical;
    }
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kData;
  }
  return 0;
}
