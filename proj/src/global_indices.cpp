#include <cmath>

#include "kernels.hpp"
#include "lpleak/indices.hpp"
#include "sparse.hpp"

namespace lpleak {
namespace {

std::string num(double x) { return std::to_string(x); }

// Row u of (I - βA)^-1.
template <class Finish>
std::vector<double> resolvent_scores(const Graph& g, double beta, std::span<const NodePair> pairs, Execution exec,
                                     Finish finish) {
  const std::size_t n = g.node_count();
  detail::SpdSolver solver(
      detail::shifted_system(n, std::vector<double>(n, 1.0), beta, detail::adjacency_triplets(g)), "I - beta A");
  return detail::score_rows1(
      g, pairs, detail::Side::one, exec, [n] { return detail::SolveWorkspace(n); },
      [&](NodeId src, std::span<double> out, detail::SolveWorkspace& ws) {
        solver.solve_unit(src, ws.rhs, ws.x);
        for (std::size_t v = 0; v < n; ++v) out[v] = finish(src, NodeId(v), ws.x[Eigen::Index(v)]);
      });
}

}  // namespace

std::vector<double> score_katz(const Graph& g, double beta, std::span<const NodePair> pairs, Execution exec,
                               double lambda_max) {
  if (lambda_max < 0.0) lambda_max = spectral_radius(g);
  if (!(beta > 0.0) || beta * lambda_max >= 1.0)
    throw ArgumentError("katz: beta=" + num(beta) + " outside (0, 1/lambda_max) with lambda_max=" + num(lambda_max));
  return resolvent_scores(g, beta, pairs, exec, [](NodeId u, NodeId v, double x) { return u == v ? x - 1.0 : x; });
}

std::vector<double> score_lhn2(const Graph& g, double phi, std::span<const NodePair> pairs, Execution exec,
                               double lambda_max) {
  if (!(phi > 0.0 && phi < 1.0)) throw ArgumentError("lhn2: phi=" + num(phi) + " outside (0,1)");
  if (lambda_max < 0.0) lambda_max = spectral_radius(g);
  if (lambda_max == 0.0) return std::vector<double>(pairs.size(), 0.0);
  return resolvent_scores(g, phi / lambda_max, pairs, exec, [&g](NodeId u, NodeId v, double x) {
    const std::size_t ku = g.degree(u), kv = g.degree(v);
    return ku && kv ? x / (double(ku) * double(kv)) : 0.0;
  });
}

std::vector<double> score_rwr(const Graph& g, double c, std::span<const NodePair> pairs, Execution exec,
                              const RwrOptions& opts) {
  if (!(c > 0.0 && c < 1.0)) throw ArgumentError("rwr: c=" + num(c) + " outside (0,1)");
  const std::size_t n = g.node_count();
  // Degree-0 nodes get a self-loop so every row of P is stochastic.
  std::vector<double> k(n);
  for (NodeId u = 0; u < n; ++u) k[u] = g.degree(u) ? double(g.degree(u)) : 1.0;

  if (opts.method == RwrMethod::direct) {
    // With π_u = D y: (D - cA) y = (1-c) e_u, a symmetric positive definite
    // system, and π_uv + π_vu = (1-c) G_uv (k_u + k_v) for G = (D - cA)^-1.
    detail::Triplets w = detail::adjacency_triplets(g);
    for (NodeId u = 0; u < n; ++u)
      if (g.degree(u) == 0) w.emplace_back(int(u), int(u), 1.0);
    detail::SpdSolver solver(detail::shifted_system(n, k, c, w), "D - c A");
    return detail::score_rows1(
        g, pairs, detail::Side::one, exec, [n] { return detail::SolveWorkspace(n); },
        [&](NodeId src, std::span<double> out, detail::SolveWorkspace& ws) {
          solver.solve_unit(src, ws.rhs, ws.x);
          for (std::size_t v = 0; v < n; ++v) out[v] = (1.0 - c) * ws.x[Eigen::Index(v)] * (k[src] + k[v]);
        });
  }

  const std::size_t cap = opts.max_iter
                              ? opts.max_iter
                              : std::size_t(std::ceil(10.0 * std::log(1.0 / opts.tol) / std::log(1.0 / c)));
  struct Ws {
    std::vector<double> pi, next;
  };
  return detail::score_rows1(
      g, pairs, detail::Side::sum, exec, [n] { return Ws{std::vector<double>(n), std::vector<double>(n)}; },
      [&](NodeId src, std::span<double> out, Ws& ws) {
        std::fill(ws.pi.begin(), ws.pi.end(), 0.0);
        ws.pi[src] = 1.0;
        for (std::size_t it = 0;; ++it) {
          if (it == cap)
            throw NumericalError("rwr: fixed point did not converge within " + std::to_string(cap) + " iterations");
          double delta = 0.0;
          for (NodeId v = 0; v < n; ++v) {
            double s;
            if (g.degree(v) == 0) s = ws.pi[v];
            else {
              s = 0.0;
              for (NodeId w : g.neighbors(v)) s += ws.pi[w] / k[w];
            }
            s = c * s + (v == src ? 1.0 - c : 0.0);
            delta += std::abs(s - ws.pi[v]);
            ws.next[v] = s;
          }
          std::swap(ws.pi, ws.next);
          if (delta < opts.tol) break;
        }
        std::copy(ws.pi.begin(), ws.pi.end(), out.begin());
      });
}

}  // namespace lpleak
