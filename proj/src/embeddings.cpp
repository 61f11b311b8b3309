#include "lpleak/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <omp.h>

#include "lpleak/error.hpp"
#include "lpleak/random.hpp"

namespace lpleak {
namespace {

// Four partial sums so the loop vectorizes without reassociation flags.
double dot(const double* a, const double* b, std::size_t d) {
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= d; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  for (; i < d; ++i) s0 += a[i] * b[i];
  return (s0 + s1) + (s2 + s3);
}

double sigmoid(double f) { return 1.0 / (1.0 + std::exp(-f)); }

// log(1 + e^f) without overflow.
double softplus(double f) { return f > 0.0 ? f + std::log1p(std::exp(-f)) : std::log1p(std::exp(f)); }

// Walker alias table over node ids for unigram^power sampling: O(1) draws.
class NegativeTable {
 public:
  NegativeTable(const WalkCorpus& corpus, double power) {
    const std::size_t n = corpus.node_count;
    std::vector<double> weight(n, 0.0);
    for (const auto& walk : corpus.walks)
      for (NodeId u : walk) weight[u] += 1.0;
    double total = 0.0;
    for (double& w : weight) {
      w = w > 0.0 ? std::pow(w, power) : 0.0;
      total += w;
    }
    prob_.assign(n, 1.0);
    alias_.resize(n);
    std::vector<std::size_t> small, large;
    for (std::size_t u = 0; u < n; ++u) {
      alias_[u] = NodeId(u);
      weight[u] *= double(n) / total;
      (weight[u] < 1.0 ? small : large).push_back(u);
    }
    while (!small.empty() && !large.empty()) {
      const std::size_t s = small.back(), l = large.back();
      small.pop_back();
      prob_[s] = weight[s];
      alias_[s] = NodeId(l);
      weight[l] -= 1.0 - weight[s];
      if (weight[l] < 1.0) {
        large.pop_back();
        small.push_back(l);
      }
    }
    // Leftovers are 1 up to rounding; zero-weight nodes never remain here.
    for (std::size_t u : small) prob_[u] = weight[u] > 0.0 ? 1.0 : 0.0;
  }

  NodeId draw(Rng& rng) const {
    const std::size_t i = uniform_index(rng, prob_.size());
    return uniform_real(rng) < prob_[i] ? NodeId(i) : alias_[i];
  }

 private:
  std::vector<double> prob_;
  std::vector<NodeId> alias_;
};

}  // namespace

std::size_t WalkCorpus::token_count() const {
  std::size_t t = 0;
  for (const auto& w : walks) t += w.size();
  return t;
}

WalkCorpus generate_walks(const Graph& g, std::size_t walks_per_node, std::size_t walk_length, std::uint64_t seed,
                          Execution exec) {
  if (walks_per_node < 1 || walk_length < 1) throw ArgumentError("walks_per_node and walk_length must be >= 1");
  WalkCorpus corpus;
  corpus.walks_per_node = walks_per_node;
  corpus.walk_length = walk_length;
  corpus.seed = seed;
  corpus.node_count = g.node_count();

  std::vector<NodeId> starts;
  for (NodeId u = 0; u < g.node_count(); ++u)
    if (g.degree(u) > 0) starts.push_back(u);

  // Start order of every round, fixed up front.
  std::vector<NodeId> order;
  order.reserve(walks_per_node * starts.size());
  for (std::size_t r = 0; r < walks_per_node; ++r) {
    std::vector<NodeId> round = starts;
    Rng rng(derive_seed(seed, r));
    shuffle(std::span(round), rng);
    order.insert(order.end(), round.begin(), round.end());
  }

  corpus.walks.resize(order.size());
  const std::ptrdiff_t count = std::ptrdiff_t(order.size());
  const std::size_t per_round = starts.size();
#pragma omp parallel for schedule(static) if (exec == Execution::parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const std::size_t round = std::size_t(i) / per_round;
    NodeId cur = order[std::size_t(i)];
    Rng rng(derive_seed(derive_seed(seed, 0x10000 + round), cur));
    auto& walk = corpus.walks[std::size_t(i)];
    walk.reserve(walk_length);
    walk.push_back(cur);
    while (walk.size() < walk_length) {
      auto nb = g.neighbors(cur);
      if (nb.empty()) break;
      cur = nb[uniform_index(rng, nb.size())];
      walk.push_back(cur);
    }
  }
  return corpus;
}

Embeddings init_embeddings(std::size_t node_count, std::size_t dim, std::uint64_t seed) {
  Embeddings e;
  e.node_count = node_count;
  e.dim = dim;
  e.vectors.resize(node_count * dim);
  e.context.assign(node_count * dim, 0.0);
  Rng rng(seed);
  for (double& x : e.vectors) x = (uniform_real(rng) - 0.5) / double(dim);
  return e;
}

double pair_loss(std::span<const double> x, std::span<const double> y, std::span<const double> negatives) {
  const std::size_t d = x.size();
  double loss = softplus(-dot(x.data(), y.data(), d));
  for (std::size_t off = 0; off + d <= negatives.size(); off += d) loss += softplus(dot(x.data(), negatives.data() + off, d));
  return loss;
}

void pair_loss_gradient(std::span<const double> x, std::span<const double> y, std::span<const double> negatives,
                        std::span<double> grad_x, std::span<double> grad_y, std::span<double> grad_negatives) {
  const std::size_t d = x.size();
  const double gp = -sigmoid(-dot(x.data(), y.data(), d));
  for (std::size_t i = 0; i < d; ++i) {
    grad_x[i] = gp * y[i];
    grad_y[i] = gp * x[i];
  }
  for (std::size_t off = 0; off + d <= negatives.size(); off += d) {
    const double gn = sigmoid(dot(x.data(), negatives.data() + off, d));
    for (std::size_t i = 0; i < d; ++i) {
      grad_x[i] += gn * negatives[off + i];
      grad_negatives[off + i] = gn * x[i];
    }
  }
}

Embeddings train_skipgram(const WalkCorpus& corpus, const SkipGramConfig& cfg) {
  if (cfg.dim < 2) throw ArgumentError("skip-gram: dim must be >= 2");
  if (cfg.window < 1) throw ArgumentError("skip-gram: window must be >= 1");
  if (cfg.negatives < 1) throw ArgumentError("skip-gram: negatives must be >= 1");
  if (corpus.walks.empty()) throw ArgumentError("skip-gram: empty corpus");

  const std::size_t d = cfg.dim;
  Embeddings e = init_embeddings(corpus.node_count, d, derive_seed(cfg.seed, 1));
  if (cfg.epochs == 0) return e;

  const NegativeTable table(corpus, cfg.unigram_power);
  const double total = double(cfg.epochs) * double(corpus.token_count());
  const std::ptrdiff_t walk_count = std::ptrdiff_t(corpus.walks.size());
  std::size_t processed = 0;

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    double loss_sum = 0.0;
    std::size_t pair_count = 0;
#pragma omp parallel if (cfg.parallel) reduction(+ : loss_sum, pair_count)
    {
      Rng rng(derive_seed(cfg.seed, 0x200 + epoch * 1024 + std::size_t(omp_get_thread_num())));
      std::vector<double> neu1e(d);
#pragma omp for schedule(static)
      for (std::ptrdiff_t wi = 0; wi < walk_count; ++wi) {
        const auto& walk = corpus.walks[std::size_t(wi)];
        for (std::size_t i = 0; i < walk.size(); ++i) {
          std::size_t done;
#pragma omp atomic capture
          done = processed++;
          const double lr = cfg.learning_rate * std::max(1e-4, 1.0 - double(done) / total);
          double* x = e.vectors.data() + std::size_t(walk[i]) * d;
          const std::size_t lo = i >= cfg.window ? i - cfg.window : 0;
          const std::size_t hi = std::min(walk.size() - 1, i + cfg.window);
          for (std::size_t j = lo; j <= hi; ++j) {
            if (j == i) continue;
            const NodeId ctx = walk[j];
            std::fill(neu1e.begin(), neu1e.end(), 0.0);
            for (std::size_t k = 0; k <= cfg.negatives; ++k) {
              NodeId target = ctx;
              double label = 1.0;
              if (k > 0) {
                target = table.draw(rng);
                if (target == ctx) continue;
                label = 0.0;
              }
              double* y = e.context.data() + std::size_t(target) * d;
              const double sig = sigmoid(dot(x, y, d));
              // -log σ(f) for the positive, -log σ(-f) for a negative.
              loss_sum -= std::log(std::max(label > 0.0 ? sig : 1.0 - sig, 1e-300));
              const double g = (label - sig) * lr;
              for (std::size_t c = 0; c < d; ++c) {
                neu1e[c] += g * y[c];
                y[c] += g * x[c];
              }
            }
            for (std::size_t c = 0; c < d; ++c) x[c] += neu1e[c];
            ++pair_count;
          }
        }
      }
    }
    e.epoch_loss.push_back(pair_count ? loss_sum / double(pair_count) : 0.0);
  }

  for (double v : e.vectors)
    if (!std::isfinite(v)) throw NumericalError("skip-gram: embedding diverged");
  return e;
}

std::vector<double> score_embedding(const Embeddings& e, std::span<const NodePair> pairs, EmbeddingScore kind) {
  std::vector<double> out(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const NodePair p = pairs[i].canonical();
    if (p.u >= e.node_count || p.v >= e.node_count) throw ArgumentError("embedding score: node id out of range");
    auto a = e.vector(p.u), b = e.vector(p.v);
    double s = dot(a.data(), b.data(), e.dim);
    if (kind == EmbeddingScore::cosine) {
      const double na = std::sqrt(dot(a.data(), a.data(), e.dim));
      const double nb = std::sqrt(dot(b.data(), b.data(), e.dim));
      s = na > 0.0 && nb > 0.0 ? s / (na * nb) : 0.0;
    }
    out[i] = s;
  }
  return out;
}

std::string format_embeddings(const Graph& g, const Embeddings& e) {
  std::string out = std::to_string(e.node_count) + " " + std::to_string(e.dim) + "\n";
  char buf[32];
  for (NodeId u = 0; u < e.node_count; ++u) {
    out += g.label(u);
    for (double v : e.vector(u)) {
      std::snprintf(buf, sizeof buf, " %.9g", v);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

Embeddings train_deepwalk(const Graph& g, std::size_t dim, const DeepWalkConfig& cfg, std::uint64_t seed) {
  WalkCorpus corpus = generate_walks(g, cfg.walks_per_node, cfg.walk_length, derive_seed(seed, 11));
  if (corpus.walks.empty()) throw ArgumentError("deepwalk: training graph has no edges");
  SkipGramConfig sg;
  sg.dim = dim;
  sg.window = cfg.window;
  sg.negatives = cfg.negatives;
  sg.epochs = cfg.epochs;
  sg.learning_rate = cfg.learning_rate;
  sg.seed = derive_seed(seed, 12);
  return train_skipgram(corpus, sg);
}

}  // namespace lpleak
