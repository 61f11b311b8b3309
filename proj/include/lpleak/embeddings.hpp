#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lpleak/graph.hpp"

namespace lpleak {

struct WalkCorpus {
  std::vector<std::vector<NodeId>> walks;
  std::size_t walks_per_node = 0;
  std::size_t walk_length = 0;
  std::uint64_t seed = 0;
  std::size_t node_count = 0;

  std::size_t token_count() const;
};

/// Uniform-neighbor truncated walks. Each round visits every non-isolated
/// node once in a seeded random order; walk r·N + u draws from its own
/// derived seed, so the corpus is identical under any thread count.
WalkCorpus generate_walks(const Graph& g, std::size_t walks_per_node, std::size_t walk_length, std::uint64_t seed,
                          Execution exec = Execution::parallel);

struct SkipGramConfig {
  std::size_t dim = 64;
  std::size_t window = 5;
  std::size_t negatives = 5;
  std::size_t epochs = 5;
  double learning_rate = 0.025;
  double unigram_power = 0.75;
  std::uint64_t seed = 1;
  /// Hogwild updates over walks; faster but not reproducible.
  bool parallel = false;
};

/// Row-major N×d tables of input (`vectors`) and output (`context`) vectors.
struct Embeddings {
  std::size_t node_count = 0;
  std::size_t dim = 0;
  std::vector<double> vectors;
  std::vector<double> context;
  /// Mean negative log-likelihood per (center, context) pair, per epoch.
  std::vector<double> epoch_loss;

  std::span<const double> vector(NodeId u) const { return {vectors.data() + std::size_t(u) * dim, dim}; }
};

/// Initial tables: input vectors uniform in [-0.5/d, 0.5/d], context zero.
Embeddings init_embeddings(std::size_t node_count, std::size_t dim, std::uint64_t seed);

/// Skip-gram with negative sampling, plain SGD with a linearly decaying
/// rate. Negatives follow the corpus unigram distribution raised to
/// `unigram_power`. Single-threaded mode is bit-reproducible.
Embeddings train_skipgram(const WalkCorpus& corpus, const SkipGramConfig& cfg);

/// Loss of one positive (center x, context y) with negatives y_n:
///   -log σ(x·y) - Σ log σ(-x·y_n)
double pair_loss(std::span<const double> x, std::span<const double> y, std::span<const double> negatives);

/// Gradient of pair_loss with respect to x, y, and each negative (stacked
/// as in `negatives`).
void pair_loss_gradient(std::span<const double> x, std::span<const double> y, std::span<const double> negatives,
                        std::span<double> grad_x, std::span<double> grad_y, std::span<double> grad_negatives);

enum class EmbeddingScore { dot, cosine };

std::vector<double> score_embedding(const Embeddings& e, std::span<const NodePair> pairs,
                                    EmbeddingScore kind = EmbeddingScore::dot);

/// "N d" header, then "label v1 ... vd" per node.
std::string format_embeddings(const Graph& g, const Embeddings& e);

/// DeepWalk end to end: walks on `g`, skip-gram training, embedding scores.
struct DeepWalkConfig {
  std::size_t walks_per_node = 10;
  std::size_t walk_length = 40;
  std::size_t window = 5;
  std::size_t negatives = 5;
  std::size_t epochs = 5;
  double learning_rate = 0.025;
  EmbeddingScore score = EmbeddingScore::dot;
};

Embeddings train_deepwalk(const Graph& g, std::size_t dim, const DeepWalkConfig& cfg, std::uint64_t seed);

}  // namespace lpleak
