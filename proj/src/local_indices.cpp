#include <cmath>
#include <cstdio>

#include "kernels.hpp"
#include "lpleak/indices.hpp"

namespace lpleak {
namespace {

// Scratch for walking two hops out from a source: the touched list keeps
// resets proportional to the neighborhood instead of N.
struct TwoHop {
  std::vector<double> a2;
  std::vector<NodeId> touched;
  explicit TwoHop(std::size_t n) : a2(n, 0.0) {}

  template <class Weight>
  void fill(const Graph& g, NodeId src, Weight weight) {
    for (NodeId z : g.neighbors(src)) {
      const double w = weight(z);
      for (NodeId x : g.neighbors(z)) {
        if (a2[x] == 0.0) touched.push_back(x);
        a2[x] += w;
      }
    }
  }
  void clear() {
    for (NodeId x : touched) a2[x] = 0.0;
    touched.clear();
  }
};

template <class Weight>
std::vector<double> two_hop_scores(const Graph& g, std::span<const NodePair> pairs, Execution exec, Weight weight) {
  const std::size_t n = g.node_count();
  return detail::score_rows1(
      g, pairs, detail::Side::one, exec, [n] { return TwoHop(n); },
      [&](NodeId src, std::span<double> out, TwoHop& ws) {
        ws.fill(g, src, weight);
        std::copy(ws.a2.begin(), ws.a2.end(), out.begin());
        ws.clear();
      });
}

}  // namespace

std::vector<double> score_cn(const Graph& g, std::span<const NodePair> pairs, Execution exec) {
  return two_hop_scores(g, pairs, exec, [](NodeId) { return 1.0; });
}

std::vector<double> score_aa(const Graph& g, std::span<const NodePair> pairs, Execution exec) {
  return two_hop_scores(g, pairs, exec, [&g](NodeId z) {
    const double k = double(g.degree(z));
    return 1.0 / std::log(k > 1.0 ? k : k + aa_guard);
  });
}

std::vector<std::vector<double>> score_lp_grid(const Graph& g, std::span<const double> eps,
                                               std::span<const NodePair> pairs, Execution exec) {
  const std::size_t n = g.node_count();
  const std::size_t width = eps.size();
  struct Ws {
    TwoHop two;
    std::vector<double> a3;
  };
  return detail::score_rows(
      g, pairs, detail::Side::one, width, exec, [n] { return Ws{TwoHop(n), std::vector<double>(n)}; },
      [&](NodeId src, std::span<double> out, Ws& ws) {
        ws.two.fill(g, src, [](NodeId) { return 1.0; });
        // (A³)_src = A · (A²)_src, summed over the two-hop support only.
        std::fill(ws.a3.begin(), ws.a3.end(), 0.0);
        for (NodeId w : ws.two.touched)
          for (NodeId x : g.neighbors(w)) ws.a3[x] += ws.two.a2[w];
        for (std::size_t k = 0; k < width; ++k)
          for (std::size_t v = 0; v < n; ++v) out[k * n + v] = ws.two.a2[v] + eps[k] * ws.a3[v];
        ws.two.clear();
      });
}

std::vector<double> score_lp(const Graph& g, double eps, std::span<const NodePair> pairs, Execution exec) {
  return std::move(score_lp_grid(g, std::span<const double>(&eps, 1), pairs, exec)[0]);
}

std::string format_scores(const Graph& g, std::span<const NodePair> pairs, std::span<const double> scores) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    std::snprintf(buf, sizeof buf, " %.17g\n", scores[i]);
    out += g.label(pairs[i].u);
    out += ' ';
    out += g.label(pairs[i].v);
    out += buf;
  }
  return out;
}

}  // namespace lpleak
