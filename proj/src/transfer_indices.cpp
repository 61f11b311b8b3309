#include <cmath>
#include <algorithm>

#include "kernels.hpp"
#include "lpleak/indices.hpp"
#include "sparse.hpp"

namespace lpleak {
namespace {

// Base similarity S0 (zero diagonal) as symmetric triplets, plus its row sums.
template <class Weight>
void base_matrix(const Graph& g, Weight weight, detail::Triplets& s0, std::vector<double>& row_sum) {
  const std::size_t n = g.node_count();
  row_sum.assign(n, 0.0);
  std::vector<double> acc(n, 0.0);
  std::vector<NodeId> touched;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId z : g.neighbors(u)) {
      const double w = weight(z);
      for (NodeId x : g.neighbors(z)) {
        if (x == u) continue;
        if (acc[x] == 0.0) touched.push_back(x);
        acc[x] += w;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (NodeId x : touched) {
      s0.emplace_back(int(u), int(x), acc[x]);
      row_sum[u] += acc[x];
      acc[x] = 0.0;
    }
    touched.clear();
  }
}

template <class Weight>
std::vector<double> transfer_scores(const Graph& g, double lambda, std::span<const NodePair> pairs, Execution exec,
                                    Weight weight, const char* name) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw ArgumentError(std::string(name) + ": lambda=" + std::to_string(lambda) + " outside (0,1)");
  const std::size_t n = g.node_count();
  detail::Triplets s0;
  std::vector<double> row_sum;
  base_matrix(g, weight, s0, row_sum);

  // Row u of S: z solves (I - λŜ0ᵀ) z = e_u and S_u = S0 z. Substituting
  // z = D w gives the symmetric positive definite system (D - λS0) w = e_u,
  // where D holds the row sums of S0 (1 for all-zero rows).
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = row_sum[i] > 0.0 ? row_sum[i] : 1.0;
  detail::SpdSolver solver(detail::shifted_system(n, d, lambda, s0), "D - lambda S0");
  detail::SparseMatrix base(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  base.setFromTriplets(s0.begin(), s0.end());

  struct Ws {
    detail::SolveWorkspace solve;
    Eigen::VectorXd s;
  };
  return detail::score_rows1(
      g, pairs, detail::Side::mean, exec, [n] { return Ws{detail::SolveWorkspace(n), Eigen::VectorXd(Eigen::Index(n))}; },
      [&](NodeId src, std::span<double> out, Ws& ws) {
        solver.solve_unit(src, ws.solve.rhs, ws.solve.x);
        for (std::size_t i = 0; i < n; ++i) ws.solve.x[Eigen::Index(i)] *= d[i];
        ws.s.noalias() = base * ws.solve.x;
        for (std::size_t v = 0; v < n; ++v) out[v] = ws.s[Eigen::Index(v)];
      });
}

}  // namespace

std::vector<double> score_tscn(const Graph& g, double lambda, std::span<const NodePair> pairs, Execution exec) {
  return transfer_scores(g, lambda, pairs, exec, [](NodeId) { return 1.0; }, "tscn");
}

std::vector<double> score_tsaa(const Graph& g, double lambda, std::span<const NodePair> pairs, Execution exec) {
  return transfer_scores(
      g, lambda, pairs, exec,
      [&g](NodeId z) {
        const double k = double(g.degree(z));
        return 1.0 / std::log(k > 1.0 ? k : k + aa_guard);
      },
      "tsaa");
}

}  // namespace lpleak
