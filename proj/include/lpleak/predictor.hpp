#pragma once
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpleak/embeddings.hpp"
#include "lpleak/graph.hpp"
#include "lpleak/indices.hpp"

namespace lpleak {

/// The parameterized predictors, plus the two parameter-free base indices
/// (cn, aa) used as reduction anchors.
enum class PredictorId { katz, lhn2, lp, lrw, srw, rwr, tsaa, tscn, deepwalk, cn, aa };

std::string_view name(PredictorId id);
std::optional<PredictorId> parse_predictor(std::string_view s);

/// The nine parameterized predictors, in report order.
std::span<const PredictorId> benchmark_predictors();

/// True when the hyperparameter counts steps or dimensions.
bool integer_hyperparameter(PredictorId id);
bool stochastic(PredictorId id);

/// Meaning of the swept value, e.g. "beta*lambda_max" for Katz.
std::string_view hyperparameter_name(PredictorId id);

/// Throws ArgumentError unless `value` is admissible for `id`. For Katz the
/// value is a fraction f of 1/λ_max (β = f/λ_max), so one grid fits every graph.
void check_hyperparameter(PredictorId id, double value);

/// Ordered, admissible hyperparameter values for one predictor.
class HyperGrid {
 public:
  HyperGrid(PredictorId id, std::vector<double> values);

  PredictorId predictor() const noexcept { return id_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Defaults used when a config or CLI call gives no grid.
  static HyperGrid defaults(PredictorId id);
  /// "start:stop:step" (inclusive, tolerant to rounding) or "a,b,c".
  static HyperGrid parse(PredictorId id, std::string_view text);

  friend bool operator==(const HyperGrid&, const HyperGrid&) = default;

 private:
  PredictorId id_;
  std::vector<double> values_;
};

struct PairScores {
  PairList pairs;
  std::vector<double> scores;
  PredictorId predictor = PredictorId::cn;
  double hyperparameter = 0.0;
};

/// Everything besides the swept value that affects scores.
struct ScoreOptions {
  Execution exec = Execution::parallel;
  DeepWalkConfig deepwalk;
  RwrOptions rwr;
};

/// Scores for one hyperparameter value. `seed` only matters for stochastic
/// predictors. The graph passed here is the only input the scores depend on.
PairScores score_pairs(const Graph& g, PredictorId id, double value, std::span<const NodePair> pairs,
                       std::uint64_t seed = 0, const ScoreOptions& opts = {});

/// Scores at every grid value; result[k] belongs to grid[k]. Stochastic
/// predictors train once per grid value from derive_seed(seed, training + k),
/// so any single point can be reproduced by score_grid_point.
std::vector<std::vector<double>> score_grid(const Graph& g, const HyperGrid& grid, std::span<const NodePair> pairs,
                                            std::uint64_t seed = 0, const ScoreOptions& opts = {});

/// The k-th point of score_grid, computed alone.
std::vector<double> score_grid_point(const Graph& g, const HyperGrid& grid, std::size_t k,
                                     std::span<const NodePair> pairs, std::uint64_t seed = 0,
                                     const ScoreOptions& opts = {});

}  // namespace lpleak
