#include <algorithm>
#include <cmath>

#include "kernels.hpp"
#include "lpleak/indices.hpp"

namespace lpleak {
namespace {

void check_steps(std::span<const int> steps) {
  if (steps.empty()) throw ArgumentError("random walk: empty step list");
  for (int t : steps)
    if (t < 1) throw ArgumentError("random walk: step count must be >= 1, got " + std::to_string(t));
}

// π ← Pᵀ π with P uniform over neighbors; degree-0 nodes keep their mass.
void transition(const Graph& g, const std::vector<double>& inv_degree, const std::vector<double>& pi,
                std::vector<double>& next) {
  const std::size_t n = g.node_count();
  for (NodeId v = 0; v < n; ++v) {
    if (g.degree(v) == 0) {
      next[v] = pi[v];
      continue;
    }
    double s = 0.0;
    for (NodeId w : g.neighbors(v)) s += pi[w] * inv_degree[w];
    next[v] = s;
  }
}

}  // namespace

std::vector<std::vector<double>> score_walk_grid(const Graph& g, std::span<const int> steps, bool superposed,
                                                 std::span<const NodePair> pairs, Execution exec) {
  check_steps(steps);
  const std::size_t n = g.node_count();
  const std::size_t width = steps.size();
  const int t_max = *std::max_element(steps.begin(), steps.end());
  const double two_m = 2.0 * double(g.edge_count());

  std::vector<double> inv_degree(n, 0.0);
  for (NodeId u = 0; u < n; ++u)
    if (g.degree(u)) inv_degree[u] = 1.0 / double(g.degree(u));

  struct Ws {
    std::vector<double> pi, next, acc;
  };
  return detail::score_rows(
      g, pairs, detail::Side::sum, width, exec,
      [n] { return Ws{std::vector<double>(n), std::vector<double>(n), std::vector<double>(n)}; },
      [&](NodeId src, std::span<double> out, Ws& ws) {
        const double q = two_m > 0.0 ? double(g.degree(src)) / two_m : 0.0;
        std::fill(ws.pi.begin(), ws.pi.end(), 0.0);
        std::fill(ws.acc.begin(), ws.acc.end(), 0.0);
        ws.pi[src] = 1.0;
        for (int l = 1; l <= t_max; ++l) {
          transition(g, inv_degree, ws.pi, ws.next);
          std::swap(ws.pi, ws.next);
          if (superposed)
            for (std::size_t v = 0; v < n; ++v) ws.acc[v] += q * ws.pi[v];
          for (std::size_t k = 0; k < width; ++k) {
            if (steps[k] != l) continue;
            double* row = out.data() + k * n;
            if (superposed) std::copy(ws.acc.begin(), ws.acc.end(), row);
            else
              for (std::size_t v = 0; v < n; ++v) row[v] = q * ws.pi[v];
          }
        }
      });
}

std::vector<double> score_lrw(const Graph& g, int t, std::span<const NodePair> pairs, Execution exec) {
  return std::move(score_walk_grid(g, std::span<const int>(&t, 1), false, pairs, exec)[0]);
}

std::vector<double> score_srw(const Graph& g, int t, std::span<const NodePair> pairs, Execution exec) {
  return std::move(score_walk_grid(g, std::span<const int>(&t, 1), true, pairs, exec)[0]);
}

}  // namespace lpleak
