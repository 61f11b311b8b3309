#include "lpleak/predictor.hpp"

#include <array>
#include <charconv>
#include <cmath>

#include "lpleak/error.hpp"
#include "lpleak/random.hpp"

namespace lpleak {
namespace {

struct Info {
  PredictorId id;
  std::string_view name;
  std::string_view parameter;
};

constexpr std::array<Info, 11> kInfo{{
    {PredictorId::katz, "katz", "beta*lambda_max"},
    {PredictorId::lhn2, "lhn2", "phi"},
    {PredictorId::lp, "lp", "epsilon"},
    {PredictorId::lrw, "lrw", "steps"},
    {PredictorId::srw, "srw", "steps"},
    {PredictorId::rwr, "rwr", "c"},
    {PredictorId::tsaa, "tsaa", "lambda"},
    {PredictorId::tscn, "tscn", "lambda"},
    {PredictorId::deepwalk, "deepwalk", "dim"},
    {PredictorId::cn, "cn", "none"},
    {PredictorId::aa, "aa", "none"},
}};

constexpr std::array<PredictorId, 9> kBenchmark{PredictorId::lp,  PredictorId::katz, PredictorId::lhn2,
                                                PredictorId::srw, PredictorId::lrw,  PredictorId::rwr,
                                                PredictorId::deepwalk, PredictorId::tscn, PredictorId::tsaa};

const Info& info(PredictorId id) {
  for (const Info& i : kInfo)
    if (i.id == id) return i;
  throw ArgumentError("unknown predictor id");
}

std::vector<double> range(double start, double stop, double step) {
  std::vector<double> v;
  for (std::size_t i = 0;; ++i) {
    double x = start + double(i) * step;
    if (x > stop + 1e-9 * std::abs(step)) break;
    v.push_back(std::round(x * 1e12) / 1e12);
  }
  return v;
}

double parse_number(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ArgumentError("grid: cannot parse number '" + std::string(s) + "'");
  return x;
}

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

}  // namespace

std::string_view name(PredictorId id) { return info(id).name; }

std::optional<PredictorId> parse_predictor(std::string_view s) {
  for (const Info& i : kInfo)
    if (i.name == s) return i.id;
  if (s == "lhn-ii" || s == "lhnii") return PredictorId::lhn2;
  return std::nullopt;
}

std::span<const PredictorId> benchmark_predictors() { return kBenchmark; }

bool integer_hyperparameter(PredictorId id) {
  return id == PredictorId::lrw || id == PredictorId::srw || id == PredictorId::deepwalk;
}

bool stochastic(PredictorId id) { return id == PredictorId::deepwalk; }

std::string_view hyperparameter_name(PredictorId id) { return info(id).parameter; }

void check_hyperparameter(PredictorId id, double x) {
  auto fail = [&](const char* rule) {
    throw ArgumentError(std::string(name(id)) + ": hyperparameter " + std::to_string(x) + " must be " + rule);
  };
  if (!std::isfinite(x)) fail("finite");
  switch (id) {
    case PredictorId::katz:
    case PredictorId::lhn2:
    case PredictorId::rwr:
    case PredictorId::tsaa:
    case PredictorId::tscn:
      if (!(x > 0.0 && x < 1.0)) fail("in (0,1)");
      break;
    case PredictorId::lrw:
    case PredictorId::srw:
      if (!is_integer(x) || x < 1.0) fail("an integer >= 1");
      break;
    case PredictorId::deepwalk:
      if (!is_integer(x) || x < 2.0) fail("an integer >= 2");
      break;
    case PredictorId::lp:
    case PredictorId::cn:
    case PredictorId::aa:
      break;
  }
}

HyperGrid::HyperGrid(PredictorId id, std::vector<double> values) : id_(id), values_(std::move(values)) {
  if (values_.empty()) throw ArgumentError("grid for " + std::string(name(id)) + " is empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    check_hyperparameter(id, values_[i]);
    if (i > 0 && !(values_[i] > values_[i - 1]))
      throw ArgumentError("grid for " + std::string(name(id)) + " is not strictly increasing");
  }
}

HyperGrid HyperGrid::defaults(PredictorId id) {
  switch (id) {
    case PredictorId::lp:
      return {id, range(0.0, 0.1, 0.01)};
    case PredictorId::lrw:
    case PredictorId::srw:
      return {id, range(1, 10, 1)};
    case PredictorId::deepwalk:
      return {id, {8, 16, 32, 64, 128}};
    case PredictorId::cn:
    case PredictorId::aa:
      return {id, {0.0}};
    default:
      return {id, range(0.05, 0.95, 0.1)};
  }
}

HyperGrid HyperGrid::parse(PredictorId id, std::string_view text) {
  std::vector<std::string_view> parts;
  const char sep = text.find(':') != std::string_view::npos ? ':' : ',';
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  std::vector<double> values;
  if (sep == ':') {
    if (parts.size() != 3) throw ArgumentError("grid range must be start:stop:step");
    const double a = parse_number(parts[0]), b = parse_number(parts[1]), step = parse_number(parts[2]);
    if (!(step > 0.0) || b < a) throw ArgumentError("grid range needs step > 0 and stop >= start");
    values = range(a, b, step);
  } else {
    for (auto p : parts) values.push_back(parse_number(p));
  }
  return {id, std::move(values)};
}

PairScores score_pairs(const Graph& g, PredictorId id, double value, std::span<const NodePair> pairs,
                       std::uint64_t seed, const ScoreOptions& opts) {
  check_hyperparameter(id, value);
  PairScores out;
  out.pairs.assign(pairs.begin(), pairs.end());
  out.predictor = id;
  out.hyperparameter = value;
  const Execution ex = opts.exec;
  switch (id) {
    case PredictorId::cn:
      out.scores = score_cn(g, pairs, ex);
      break;
    case PredictorId::aa:
      out.scores = score_aa(g, pairs, ex);
      break;
    case PredictorId::katz: {
      const double lambda_max = spectral_radius(g);
      out.scores = lambda_max > 0.0 ? score_katz(g, value / lambda_max, pairs, ex, lambda_max)
                                    : std::vector<double>(pairs.size(), 0.0);
      break;
    }
    case PredictorId::lhn2: {
      const double lambda_max = spectral_radius(g);
      out.scores = lambda_max > 0.0 ? score_lhn2(g, value, pairs, ex, lambda_max)
                                    : std::vector<double>(pairs.size(), 0.0);
      break;
    }
    case PredictorId::lp:
      out.scores = score_lp(g, value, pairs, ex);
      break;
    case PredictorId::lrw:
      out.scores = score_lrw(g, int(value), pairs, ex);
      break;
    case PredictorId::srw:
      out.scores = score_srw(g, int(value), pairs, ex);
      break;
    case PredictorId::rwr:
      out.scores = score_rwr(g, value, pairs, ex, opts.rwr);
      break;
    case PredictorId::tsaa:
      out.scores = score_tsaa(g, value, pairs, ex);
      break;
    case PredictorId::tscn:
      out.scores = score_tscn(g, value, pairs, ex);
      break;
    case PredictorId::deepwalk: {
      Embeddings e = train_deepwalk(g, std::size_t(value), opts.deepwalk, seed);
      out.scores = score_embedding(e, pairs, opts.deepwalk.score);
      break;
    }
  }
  for (double s : out.scores)
    if (!std::isfinite(s)) throw NumericalError(std::string(name(id)) + ": non-finite score");
  return out;
}

std::vector<double> score_grid_point(const Graph& g, const HyperGrid& grid, std::size_t k,
                                     std::span<const NodePair> pairs, std::uint64_t seed, const ScoreOptions& opts) {
  const std::uint64_t point_seed = derive_seed(seed, seed_stream::training + k);
  return score_pairs(g, grid.predictor(), grid[k], pairs, point_seed, opts).scores;
}

std::vector<std::vector<double>> score_grid(const Graph& g, const HyperGrid& grid, std::span<const NodePair> pairs,
                                            std::uint64_t seed, const ScoreOptions& opts) {
  const PredictorId id = grid.predictor();
  std::vector<std::vector<double>> out;
  switch (id) {
    case PredictorId::lp:
      out = score_lp_grid(g, grid.values(), pairs, opts.exec);
      break;
    case PredictorId::lrw:
    case PredictorId::srw: {
      std::vector<int> steps(grid.values().begin(), grid.values().end());
      out = score_walk_grid(g, steps, id == PredictorId::srw, pairs, opts.exec);
      break;
    }
    case PredictorId::cn:
    case PredictorId::aa: {
      auto base = score_pairs(g, id, grid[0], pairs, 0, opts).scores;
      out.assign(grid.size(), base);
      break;
    }
    case PredictorId::katz:
    case PredictorId::lhn2: {
      // One spectral radius for the whole grid; the value is deterministic,
      // so each point still matches score_grid_point exactly.
      const double lambda_max = spectral_radius(g);
      for (double v : grid.values()) {
        if (lambda_max == 0.0) out.emplace_back(pairs.size(), 0.0);
        else if (id == PredictorId::katz) out.push_back(score_katz(g, v / lambda_max, pairs, opts.exec, lambda_max));
        else out.push_back(score_lhn2(g, v, pairs, opts.exec, lambda_max));
      }
      break;
    }
    default:
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const std::string where = " [" + std::string(name(id)) + " at grid value " + std::to_string(grid[k]) + "]";
        try {
          out.push_back(score_grid_point(g, grid, k, pairs, seed, opts));
        } catch (const NumericalError& e) {
          throw NumericalError(e.what() + where);
        } catch (const ArgumentError& e) {
          throw ArgumentError(e.what() + where);
        }
      }
      return out;
  }
  for (const auto& row : out)
    for (double s : row)
      if (!std::isfinite(s)) throw NumericalError(std::string(name(id)) + ": non-finite score");
  return out;
}

}  // namespace lpleak
