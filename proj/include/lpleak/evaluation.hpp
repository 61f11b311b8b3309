#pragma once
#include <cstdint>
#include <span>
#include <vector>

#include "lpleak/predictor.hpp"
#include "lpleak/split.hpp"

namespace lpleak {

enum class AucMode { exact, sampled };

struct AucResult {
  double value = 0.0;
  std::size_t positives = 0;
  std::size_t negatives = 0;
  AucMode mode = AucMode::exact;
  std::size_t samples = 0;  ///< comparisons drawn in sampled mode
};

/// Exact when positives × negatives ≤ exact_max_comparisons, else sampled.
struct AucPolicy {
  std::uint64_t exact_max_comparisons = 10'000'000;
  std::size_t samples = 100'000;
};

/// (wins + ties/2) / (p·q) over every positive-negative comparison, via
/// sorting; wins and ties are counted as integers.
AucResult auc_exact(std::span<const double> pos, std::span<const double> neg);
/// `n` independent uniform comparisons: (n' + n''/2) / n.
AucResult auc_sampled(std::span<const double> pos, std::span<const double> neg, std::size_t n, std::uint64_t seed);
AucResult auc(std::span<const double> pos, std::span<const double> neg, const AucPolicy& policy,
              std::uint64_t seed);

/// One AUC–λ curve: AUC at every grid value for a fixed pair set.
struct ScoreGrid {
  HyperGrid grid;
  std::vector<double> auc;

  /// Grid index of the maximum AUC; the smallest grid value wins ties.
  std::size_t best() const;
};

struct EvalOptions {
  ScoreOptions scoring;
  AucPolicy auc;
  /// AUC' comes from retraining on E_T' at λ' (the mapped point on the E_P
  /// curve). When false, the E_T-trained model is evaluated on E_P instead.
  bool retrain_prime = true;
};

/// Seed of the sampled-AUC draws at grid index k.
std::uint64_t auc_seed(std::uint64_t seed, std::size_t k);

/// AUC at every grid value, scoring positives against negatives from
/// `train`. Positives must not be edges of `train`.
ScoreGrid sweep(const Graph& train, std::span<const Edge> positives, std::span<const NodePair> negatives,
                const HyperGrid& grid, std::uint64_t seed, const EvalOptions& opts = {});

struct TwoSetResult {
  double lambda_star = 0.0;
  double auc_star = 0.0;
  ScoreGrid test_curve;
};

struct ThreeSetResult {
  double lambda_prime = 0.0;
  double auc_prime = 0.0;
  ScoreGrid validation_curve;
};

/// Leaky protocol: train on E_T', pick the grid value maximizing AUC on E_P.
TwoSetResult two_set_eval(const Graph& g, const SplitBundle& bundle, const HyperGrid& grid,
                          const NegativeSample& negatives, std::uint64_t seed, const EvalOptions& opts = {});

/// Train on E_T, select λ' on E_V, then report AUC' on E_P.
ThreeSetResult three_set_eval(const Graph& g, const SplitBundle& bundle, const HyperGrid& grid,
                              const NegativeSample& negatives, std::uint64_t seed, const EvalOptions& opts = {});

/// |AUC* - AUC'| / AUC*, clamped to [0,1]. Throws NumericalError if AUC* ≤ 0.
double loss_ratio(double auc_star, double auc_prime);

struct ProtocolResult {
  double lambda_star = 0.0;
  double auc_star = 0.0;
  double lambda_prime = 0.0;
  double auc_prime = 0.0;
  double loss_ratio = 0.0;
  ScoreGrid test_curve;
  ScoreGrid validation_curve;
};

/// Both protocols on one bundle, sharing the E_P curve.
ProtocolResult evaluate_protocols(const Graph& g, const SplitBundle& bundle, const HyperGrid& grid,
                                  const NegativeSample& negatives, std::uint64_t seed, const EvalOptions& opts = {});

/// "lambda auc" lines for one curve.
std::string format_curve(const ScoreGrid& curve);

}  // namespace lpleak
