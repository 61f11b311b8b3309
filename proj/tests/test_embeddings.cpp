#include <gtest/gtest.h>

#include <cmath>

#include "lpleak/embeddings.hpp"
#include "lpleak/error.hpp"
#include "lpleak/generators.hpp"
#include "lpleak/random.hpp"

using namespace lpleak;

namespace {

Graph two_cliques() {
  std::string text;
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) text += std::to_string(5 * c + i) + " " + std::to_string(5 * c + j) + "\n";
  return parse_edge_list(text);
}

double cosine(std::span<const double> a, std::span<const double> b) {
  double ab = 0, aa = 0, bb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ab += a[i] * b[i];
    aa += a[i] * a[i];
    bb += b[i] * b[i];
  }
  return ab / std::sqrt(aa * bb);
}

}  // namespace

TEST(Walks, ForcedAlternationOnAnEdge) {
  WalkCorpus c = generate_walks(gen::path(2), 3, 9, 1);
  ASSERT_EQ(c.walks.size(), 6u);
  for (const auto& w : c.walks) {
    ASSERT_EQ(w.size(), 9u);
    for (std::size_t i = 1; i < w.size(); ++i) EXPECT_NE(w[i], w[i - 1]);
  }
}

TEST(Walks, DeterministicAndValid) {
  Graph g = gen::powerlaw_cluster(100, 300, 0.3, 2);
  WalkCorpus a = generate_walks(g, 4, 20, 7, Execution::serial);
  WalkCorpus b = generate_walks(g, 4, 20, 7, Execution::parallel);
  EXPECT_EQ(a.walks, b.walks);
  EXPECT_NE(a.walks, generate_walks(g, 4, 20, 8).walks);
  for (const auto& w : a.walks)
    for (std::size_t i = 1; i < w.size(); ++i) EXPECT_TRUE(g.has_edge(w[i - 1], w[i]));
}

TEST(Walks, IsolatedNodesStartNoWalks) {
  Graph g = parse_edge_list("a b\nb c\nz z\n");
  WalkCorpus c = generate_walks(g, 5, 10, 1);
  EXPECT_EQ(c.walks.size(), 15u);
  for (const auto& w : c.walks) EXPECT_NE(w.front(), 3u);
}

TEST(Walks, UniformNeighborChoice) {
  // On K3 the next node is one of the two others with probability 1/2.
  WalkCorpus c = generate_walks(gen::complete(3), 42, 80, 11);
  std::size_t plus = 0, steps = 0;
  for (const auto& w : c.walks)
    for (std::size_t i = 1; i < w.size(); ++i, ++steps) plus += w[i] == (w[i - 1] + 1) % 3;
  ASSERT_EQ(steps, 3u * 42u * 79u);
  const double z = (double(plus) - 0.5 * double(steps)) / std::sqrt(0.25 * double(steps));
  EXPECT_LT(std::abs(z), 3.0);
}

TEST(SkipGram, GradientMatchesFiniteDifferences) {
  Rng rng(5);
  const std::size_t d = 6, neg = 3;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(d), y(d), n(d * neg), gx(d), gy(d), gn(d * neg);
    for (auto* v : {&x, &y, &n})
      for (double& e : *v) e = 2.0 * uniform_real(rng) - 1.0;
    pair_loss_gradient(x, y, n, gx, gy, gn);
    const double h = 1e-6;
    auto check = [&](std::vector<double>& v, const std::vector<double>& grad) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        const double keep = v[i];
        v[i] = keep + h;
        const double up = pair_loss(x, y, n);
        v[i] = keep - h;
        const double down = pair_loss(x, y, n);
        v[i] = keep;
        const double fd = (up - down) / (2 * h);
        EXPECT_LT(std::abs(fd - grad[i]) / std::max(1e-3, std::abs(grad[i])), 1e-5);
      }
    };
    check(x, gx);
    check(y, gy);
    check(n, gn);
  }
}

TEST(SkipGram, ZeroEpochsReturnsInitialization) {
  WalkCorpus c = generate_walks(gen::complete(5), 2, 10, 1);
  SkipGramConfig cfg;
  cfg.dim = 8;
  cfg.epochs = 0;
  Embeddings e = train_skipgram(c, cfg);
  Embeddings init = init_embeddings(5, 8, derive_seed(cfg.seed, 1));
  EXPECT_EQ(e.vectors, init.vectors);
  EXPECT_EQ(e.context, init.context);
  for (double v : e.vectors) EXPECT_LE(std::abs(v), 0.5 / 8.0);
}

TEST(SkipGram, Errors) {
  WalkCorpus c = generate_walks(gen::complete(4), 1, 5, 1);
  SkipGramConfig cfg;
  cfg.dim = 1;
  EXPECT_THROW(train_skipgram(c, cfg), ArgumentError);
  cfg.dim = 4;
  cfg.window = 0;
  EXPECT_THROW(train_skipgram(c, cfg), ArgumentError);
  cfg.window = 2;
  cfg.negatives = 0;
  EXPECT_THROW(train_skipgram(c, cfg), ArgumentError);
  EXPECT_THROW(train_skipgram(WalkCorpus{}, SkipGramConfig{}), ArgumentError);
}

TEST(SkipGram, LossDecreasesAndRunsAreBitIdentical) {
  Graph g = gen::planted_partition(120, 500, 4, 0.9, 3);
  WalkCorpus c = generate_walks(g, 5, 30, 2);
  SkipGramConfig cfg;
  cfg.dim = 16;
  cfg.epochs = 6;
  Embeddings a = train_skipgram(c, cfg), b = train_skipgram(c, cfg);
  EXPECT_EQ(a.vectors, b.vectors);
  EXPECT_EQ(a.context, b.context);
  ASSERT_EQ(a.epoch_loss.size(), 6u);
  EXPECT_LT(a.epoch_loss[4] + a.epoch_loss[5], a.epoch_loss[0] + a.epoch_loss[1]);
}

TEST(SkipGram, TwoCliquesSeparate) {
  Graph g = two_cliques();
  DeepWalkConfig cfg;
  Embeddings e = train_deepwalk(g, 16, cfg, 3);
  double intra = 0, inter = 0;
  int ni = 0, nx = 0;
  for (NodeId u = 0; u < 10; ++u)
    for (NodeId v = u + 1; v < 10; ++v) {
      const double c = cosine(e.vector(u), e.vector(v));
      if (u / 5 == v / 5) intra += c, ++ni;
      else inter += c, ++nx;
    }
  EXPECT_GT(intra / ni, inter / nx);
  auto s = score_embedding(e, PairList{{0, 1}, {0, 7}});
  EXPECT_GT(s[0], s[1]);
}

TEST(Scoring, SymmetricAndSelfDot) {
  Embeddings e = init_embeddings(4, 3, 9);
  auto s = score_embedding(e, PairList{{0, 2}, {2, 0}});
  EXPECT_EQ(s[0], s[1]);
  e.vectors = {1, 2, 3, 1, 2, 3, 0, 0, 1, 4, 4, 4};
  EXPECT_DOUBLE_EQ(score_embedding(e, PairList{{0, 1}})[0], 14.0);
  EXPECT_DOUBLE_EQ(score_embedding(e, PairList{{0, 1}}, EmbeddingScore::cosine)[0], 1.0);
  EXPECT_THROW(score_embedding(e, PairList{{0, 9}}), ArgumentError);
}

TEST(Scoring, DumpFormat) {
  Graph g = parse_edge_list("a b\n");
  Embeddings e = init_embeddings(2, 2, 1);
  e.vectors = {0.5, -1, 2, 0.25};
  EXPECT_EQ(format_embeddings(g, e), "2 2\na 0.5 -1\nb 2 0.25\n");
}
