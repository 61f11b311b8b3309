#include <gtest/gtest.h>

#include "lpleak/error.hpp"
#include "lpleak/evaluation.hpp"
#include "lpleak/generators.hpp"
#include "lpleak/random.hpp"
#include "oracles.hpp"

using namespace lpleak;

namespace {

std::vector<double> uniform(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (double& x : v) x = uniform_real(rng);
  return v;
}

PairList non_edges(const Graph& g) {
  PairList out;
  for (const auto& p : oracle::all_pairs(g.node_count()))
    if (!g.has_edge(p.u, p.v)) out.push_back(p);
  return out;
}

// AUC of dense scores over explicit positives and negatives.
double dense_auc(const oracle::Dense& s, std::span<const Edge> pos, std::span<const NodePair> neg) {
  std::vector<double> a, b;
  for (const auto& e : pos) a.push_back(s[e.u][e.v]);
  for (const auto& e : neg) b.push_back(s[e.u][e.v]);
  return oracle::auc(a, b);
}

}  // namespace

TEST(Auc, Examples) {
  std::vector<double> pos{0.9, 0.7}, neg{0.5, 0.7};
  AucResult r = auc_exact(pos, neg);
  EXPECT_DOUBLE_EQ(r.value, 0.875);
  EXPECT_EQ(r.positives, 2u);
  EXPECT_EQ(r.mode, AucMode::exact);
  EXPECT_DOUBLE_EQ(auc_exact(std::vector<double>{3, 4}, std::vector<double>{1, 2}).value, 1.0);
  EXPECT_THROW(auc_exact({}, neg), ArgumentError);
  EXPECT_THROW(auc_sampled(pos, {}, 10, 1), ArgumentError);
}

TEST(Auc, ExactMatchesBruteForceWithTies) {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t p = 1 + uniform_index(rng, 60), q = 1 + uniform_index(rng, 60);
    std::vector<double> pos(p), neg(q);
    // Coarse values force many ties.
    for (double& x : pos) x = double(uniform_index(rng, 7));
    for (double& x : neg) x = double(uniform_index(rng, 7));
    EXPECT_DOUBLE_EQ(auc_exact(pos, neg).value, oracle::auc(pos, neg));
    EXPECT_NEAR(auc_exact(neg, pos).value, 1.0 - auc_exact(pos, neg).value, 1e-15);
  }
}

TEST(Auc, SampledConvergesAndNullIsHalf) {
  auto pos = uniform(500, 1), neg = uniform(800, 2);
  for (double& x : pos) x += 0.3;
  const double exact = auc_exact(pos, neg).value;
  AucResult s = auc_sampled(pos, neg, 100000, 3);
  EXPECT_EQ(s.mode, AucMode::sampled);
  EXPECT_EQ(s.samples, 100000u);
  EXPECT_LT(std::abs(s.value - exact), 0.01);
  EXPECT_EQ(s.value, auc_sampled(pos, neg, 100000, 3).value);
  auto a = uniform(2000, 5), b = uniform(2000, 6);
  EXPECT_NEAR(auc_sampled(a, b, 100000, 7).value, 0.5, 0.02);
}

TEST(Auc, PolicyThreshold) {
  auto a = uniform(100, 1), b = uniform(100, 2);
  AucPolicy p;
  p.exact_max_comparisons = 10000;
  EXPECT_EQ(auc(a, b, p, 1).mode, AucMode::exact);
  p.exact_max_comparisons = 9999;
  EXPECT_EQ(auc(a, b, p, 1).mode, AucMode::sampled);
}

TEST(Auc, RankInvariance) {
  auto pos = uniform(300, 8), neg = uniform(300, 9);
  const double base = auc_exact(pos, neg).value;
  for (double& x : pos) x = 3.0 * x;
  for (double& x : neg) x = 3.0 * x;
  EXPECT_EQ(auc_exact(pos, neg).value, base);
  for (double& x : pos) x = std::exp(x);
  for (double& x : neg) x = std::exp(x);
  EXPECT_EQ(auc_exact(pos, neg).value, base);
}

TEST(LossRatio, Formula) {
  EXPECT_NEAR(loss_ratio(0.90, 0.873), 0.03, 1e-12);
  EXPECT_EQ(loss_ratio(0.8, 0.8), 0.0);
  EXPECT_EQ(loss_ratio(0.5, 2.0), 1.0);
  EXPECT_THROW(loss_ratio(0.0, 0.5), NumericalError);
}

TEST(ScoreGrid, TieBreakPicksSmallestValue) {
  ScoreGrid c{HyperGrid(PredictorId::lp, {0.0, 0.01, 0.02}), {0.7, 0.7, 0.7}};
  EXPECT_EQ(c.best(), 0u);
  c.auc = {0.6, 0.8, 0.8};
  EXPECT_EQ(c.best(), 1u);
  c.auc = {0.6, 0.7, 0.8};
  EXPECT_EQ(c.best(), 2u);
}

TEST(Sweep, SinglePointAndLpReduction) {
  Graph g = gen::powerlaw_cluster(150, 600, 0.5, 1);
  SplitBundle b = nested_split(g, 0.2, 1);
  NegativeSample n = draw_negatives(g, b, 1);
  Graph train = training_graph(g, b.full_train());
  ScoreGrid one = sweep(train, b.test, n.test, HyperGrid(PredictorId::katz, {0.5}), 1);
  ASSERT_EQ(one.auc.size(), 1u);
  PairList pairs(b.test.begin(), b.test.end());
  pairs.insert(pairs.end(), n.test.begin(), n.test.end());
  auto s = score_pairs(train, PredictorId::katz, 0.5, pairs).scores;
  EXPECT_EQ(one.auc[0], auc_exact(std::span(s).first(b.test.size()), std::span(s).subspan(b.test.size())).value);

  ScoreGrid lp = sweep(train, b.test, n.test, HyperGrid(PredictorId::lp, {0.0, 0.01}), 1);
  ScoreGrid cn = sweep(train, b.test, n.test, HyperGrid(PredictorId::cn, {0.0}), 1);
  EXPECT_EQ(lp.auc[0], cn.auc[0]);
  EXPECT_THROW(sweep(g, b.test, n.test, HyperGrid(PredictorId::cn, {0.0}), 1), ArgumentError);
}

TEST(Sweep, TinyGraphsMatchBruteForce) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = gen::gnp(12, 0.4, seed);
    if (g.edge_count() < 12) continue;
    SplitBundle b = nested_split(g, 0.3, seed);
    Graph train = training_graph(g, b.full_train());
    PairList neg = non_edges(g);
    const double lmax = oracle::spectral_radius(train);
    HyperGrid lp = HyperGrid::parse(PredictorId::lp, "0:0.1:0.02");
    ScoreGrid c = sweep(train, b.test, neg, lp, seed);
    for (std::size_t k = 0; k < lp.size(); ++k)
      EXPECT_NEAR(c.auc[k], dense_auc(oracle::lp(train, lp[k]), b.test, neg), 1e-15);
    if (lmax == 0.0) continue;
    HyperGrid katz = HyperGrid::defaults(PredictorId::katz);
    ScoreGrid kc = sweep(train, b.test, neg, katz, seed);
    // Exact ties in the dense inverse may split by an ulp in the sparse solve,
    // so bracket the value by resolving near-ties both ways.
    for (std::size_t k = 0; k < katz.size(); ++k) {
      const auto s = oracle::katz(train, katz[k] / lmax);
      double lo = 0.0, hi = 0.0;
      for (const auto& e : b.test)
        for (const auto& q : neg) {
          const double d = s[e.u][e.v] - s[q.u][q.v];
          if (std::abs(d) <= 1e-9) hi += 1.0;
          else if (d > 0) lo += 1.0, hi += 1.0;
        }
      const double total = double(b.test.size()) * double(neg.size());
      EXPECT_GE(kc.auc[k], lo / total - 1e-15);
      EXPECT_LE(kc.auc[k], hi / total + 1e-15);
    }
  }
}

TEST(Protocols, TinyGraphsMatchBruteForceProtocol) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = gen::gnp(12, 0.45, seed + 100);
    if (g.edge_count() < 15) continue;
    SplitBundle b = nested_split(g, 0.3, seed);
    NegativeSample neg{non_edges(g), non_edges(g)};
    HyperGrid grid(PredictorId::srw, {1, 2, 3, 4, 5});
    ProtocolResult r = evaluate_protocols(g, b, grid, neg, seed);

    Graph tp = training_graph(g, b.full_train()), t = training_graph(g, b.train);
    std::vector<double> test_curve, val_curve;
    for (double s : grid.values()) {
      test_curve.push_back(dense_auc(oracle::srw(tp, int(s)), b.test, neg.test));
      val_curve.push_back(dense_auc(oracle::srw(t, int(s)), b.validation, neg.validation));
    }
    auto argmax = [](const std::vector<double>& v) {
      std::size_t k = 0;
      for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[k] + 1e-12) k = i;
      return k;
    };
    const std::size_t ks = argmax(test_curve), kp = argmax(val_curve);
    EXPECT_EQ(r.lambda_star, grid[ks]);
    EXPECT_EQ(r.lambda_prime, grid[kp]);
    EXPECT_NEAR(r.auc_star, test_curve[ks], 1e-12);
    EXPECT_NEAR(r.auc_prime, test_curve[kp], 1e-12);
    EXPECT_GE(r.auc_star, r.auc_prime);
  }
}

TEST(Protocols, CombinedPathEqualsSeparateCalls) {
  Graph g = gen::powerlaw_cluster(120, 500, 0.6, 5);
  SplitBundle b = nested_split(g, 0.25, 3);
  NegativeSample n = draw_negatives(g, b, 3);
  for (PredictorId id : {PredictorId::lp, PredictorId::rwr, PredictorId::lrw, PredictorId::katz}) {
    HyperGrid grid = HyperGrid::defaults(id);
    ProtocolResult r = evaluate_protocols(g, b, grid, n, 3);
    TwoSetResult two = two_set_eval(g, b, grid, n, 3);
    ThreeSetResult three = three_set_eval(g, b, grid, n, 3);
    EXPECT_EQ(r.auc_star, two.auc_star);
    EXPECT_EQ(r.lambda_star, two.lambda_star);
    EXPECT_EQ(r.auc_prime, three.auc_prime);
    EXPECT_EQ(r.lambda_prime, three.lambda_prime);
    EXPECT_GE(r.auc_star, r.auc_prime);
    EXPECT_GE(r.loss_ratio, 0.0);
    EXPECT_LE(r.loss_ratio, 1.0);
  }
}

TEST(Protocols, SingleValueGridHasNoLoss) {
  Graph g = gen::powerlaw_cluster(100, 400, 0.5, 2);
  SplitBundle b = nested_split(g, 0.2, 1);
  NegativeSample n = draw_negatives(g, b, 1);
  ProtocolResult r = evaluate_protocols(g, b, HyperGrid(PredictorId::rwr, {0.5}), n, 1);
  EXPECT_EQ(r.loss_ratio, 0.0);
  EXPECT_EQ(r.auc_star, r.auc_prime);
}

TEST(Protocols, NoRetrainFlagEvaluatesTrainOnlyModel) {
  Graph g = gen::powerlaw_cluster(100, 400, 0.5, 2);
  SplitBundle b = nested_split(g, 0.3, 1);
  NegativeSample n = draw_negatives(g, b, 1);
  EvalOptions opts;
  opts.retrain_prime = false;
  HyperGrid grid(PredictorId::cn, {0.0});
  ProtocolResult r = evaluate_protocols(g, b, grid, n, 1, opts);
  ScoreGrid direct = sweep(training_graph(g, b.train), b.test, n.test, grid, 1);
  EXPECT_EQ(r.auc_prime, direct.auc[0]);
  EXPECT_EQ(r.auc_prime, three_set_eval(g, b, grid, n, 1, opts).auc_prime);
}

TEST(Protocols, DeepWalkCurveIsReproducible) {
  Graph g = gen::planted_partition(80, 300, 4, 0.85, 1);
  SplitBundle b = nested_split(g, 0.2, 2);
  NegativeSample n = draw_negatives(g, b, 2);
  EvalOptions opts;
  opts.scoring.deepwalk.walks_per_node = 2;
  opts.scoring.deepwalk.epochs = 1;
  HyperGrid grid(PredictorId::deepwalk, {4, 8});
  ProtocolResult a = evaluate_protocols(g, b, grid, n, 2, opts);
  ProtocolResult c = evaluate_protocols(g, b, grid, n, 2, opts);
  EXPECT_EQ(a.test_curve.auc, c.test_curve.auc);
  EXPECT_EQ(a.auc_prime, three_set_eval(g, b, grid, n, 2, opts).auc_prime);
}

TEST(Format, Curve) {
  ScoreGrid c{HyperGrid(PredictorId::lrw, {1, 2}), {0.5, 0.75}};
  EXPECT_EQ(format_curve(c), "1 0.5\n2 0.75\n");
}
