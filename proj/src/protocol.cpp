#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lpleak/error.hpp"
#include "lpleak/evaluation.hpp"
#include "lpleak/random.hpp"

namespace lpleak {
namespace {

PairList joined(std::span<const Edge> positives, std::span<const NodePair> negatives) {
  PairList pairs(positives.begin(), positives.end());
  pairs.insert(pairs.end(), negatives.begin(), negatives.end());
  return pairs;
}

double auc_at(std::span<const double> scores, std::size_t p, std::uint64_t seed, std::size_t k,
              const AucPolicy& policy) {
  return auc(scores.first(p), scores.subspan(p), policy, auc_seed(seed, k)).value;
}

}  // namespace

std::size_t ScoreGrid::best() const {
  std::size_t k = 0;
  for (std::size_t i = 1; i < auc.size(); ++i)
    if (auc[i] > auc[k]) k = i;
  return k;
}

std::uint64_t auc_seed(std::uint64_t seed, std::size_t k) {
  return derive_seed(derive_seed(seed, seed_stream::auc_sampling), k);
}

ScoreGrid sweep(const Graph& train, std::span<const Edge> positives, std::span<const NodePair> negatives,
                const HyperGrid& grid, std::uint64_t seed, const EvalOptions& opts) {
  for (const Edge& e : positives)
    if (train.has_edge(e.u, e.v)) throw ArgumentError("sweep: a positive pair is an edge of the training graph");
  const PairList pairs = joined(positives, negatives);
  const auto scores = score_grid(train, grid, pairs, seed, opts.scoring);
  ScoreGrid curve{grid, {}};
  curve.auc.reserve(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    curve.auc.push_back(auc_at(scores[k], positives.size(), seed, k, opts.auc));
  return curve;
}

TwoSetResult two_set_eval(const Graph& g, const SplitBundle& bundle, const HyperGrid& grid,
                          const NegativeSample& negatives, std::uint64_t seed, const EvalOptions& opts) {
  const EdgeList full = bundle.full_train();
  const Graph train = training_graph(g, full);
  TwoSetResult r{0.0, 0.0, sweep(train, bundle.test, negatives.test, grid, seed, opts)};
  const std::size_t k = r.test_curve.best();
  r.lambda_star = grid[k];
  r.auc_star = r.test_curve.auc[k];
  return r;
}

ThreeSetResult three_set_eval(const Graph& g, const SplitBundle& bundle, const HyperGrid& grid,
                              const NegativeSample& negatives, std::uint64_t seed, const EvalOptions& opts) {
  const Graph train = training_graph(g, bundle.train);
  ThreeSetResult r{0.0, 0.0, sweep(train, bundle.validation, negatives.validation, grid, seed, opts)};
  const std::size_t k = r.validation_curve.best();
  r.lambda_prime = grid[k];
  const PairList pairs = joined(bundle.test, negatives.test);
  std::vector<double> scores;
  if (opts.retrain_prime) {
    const Graph full = training_graph(g, bundle.full_train());
    scores = score_grid_point(full, grid, k, pairs, seed, opts.scoring);
  } else {
    scores = score_grid_point(train, grid, k, pairs, seed, opts.scoring);
  }
  r.auc_prime = auc_at(scores, bundle.test.size(), seed, k, opts.auc);
  return r;
}

double loss_ratio(double auc_star, double auc_prime) {
  if (!(auc_star > 0.0)) throw NumericalError("loss ratio undefined: AUC* must be > 0");
  return std::clamp(std::abs(auc_star - auc_prime) / auc_star, 0.0, 1.0);
}

ProtocolResult evaluate_protocols(const Graph& g, const SplitBundle& bundle, const HyperGrid& grid,
                                  const NegativeSample& negatives, std::uint64_t seed, const EvalOptions& opts) {
  TwoSetResult two = two_set_eval(g, bundle, grid, negatives, seed, opts);
  const Graph train = training_graph(g, bundle.train);
  ScoreGrid validation = sweep(train, bundle.validation, negatives.validation, grid, seed, opts);

  const std::size_t k = validation.best();
  double auc_prime = two.test_curve.auc[k];  // the retrained point is the E_P curve at λ'
  if (!opts.retrain_prime) {
    const PairList pairs = joined(bundle.test, negatives.test);
    auc_prime = auc_at(score_grid_point(train, grid, k, pairs, seed, opts.scoring), bundle.test.size(), seed, k,
                       opts.auc);
  }
  return ProtocolResult{two.lambda_star,
                        two.auc_star,
                        grid[k],
                        auc_prime,
                        loss_ratio(two.auc_star, auc_prime),
                        std::move(two.test_curve),
                        std::move(validation)};
}

std::string format_curve(const ScoreGrid& curve) {
  std::string out;
  char buf[64];
  for (std::size_t k = 0; k < curve.auc.size(); ++k) {
    std::snprintf(buf, sizeof buf, "%.12g %.17g\n", curve.grid[k], curve.auc[k]);
    out += buf;
  }
  return out;
}

}  // namespace lpleak
