#pragma once
#include <span>
#include <vector>

#include "lpleak/graph.hpp"

namespace lpleak {

// Similarity scores for explicit query pairs, computed from the observed
// (training) graph only. No kernel materializes the N×N similarity matrix:
// pairs are grouped by source node and one row is evaluated per source.
// Pair orientation never matters. Every kernel has a serial path that the
// parallel path reproduces bit for bit.

/// Largest adjacency eigenvalue by power iteration on A + I (shifted so
/// bipartite graphs converge). 0 for a graph without edges.
double spectral_radius(const Graph& g, double tol = 1e-9, std::size_t max_iter = 200000);

/// |Γ(u) ∩ Γ(v)|
std::vector<double> score_cn(const Graph& g, std::span<const NodePair> pairs, Execution exec = Execution::parallel);

/// Σ_{z ∈ Γ(u) ∩ Γ(v)} 1 / ln(k_z). A degree-1 z would divide by ln 1 = 0;
/// it is guarded as 1/ln(k_z + aa_guard), though a common neighbor of two
/// distinct nodes always has k_z ≥ 2.
inline constexpr double aa_guard = 1e-10;
std::vector<double> score_aa(const Graph& g, std::span<const NodePair> pairs, Execution exec = Execution::parallel);

/// [(I - βA)^-1 - I]_uv, exact sparse LDLᵀ solve per source.
/// Requires 0 < β < 1/λ_max (pass lambda_max < 0 to compute it).
std::vector<double> score_katz(const Graph& g, double beta, std::span<const NodePair> pairs,
                               Execution exec = Execution::parallel, double lambda_max = -1.0);

/// (A²)_uv + ε (A³)_uv
std::vector<double> score_lp(const Graph& g, double eps, std::span<const NodePair> pairs,
                             Execution exec = Execution::parallel);
/// LP at several ε in one pass; result[k] belongs to eps[k].
std::vector<std::vector<double>> score_lp_grid(const Graph& g, std::span<const double> eps,
                                               std::span<const NodePair> pairs, Execution exec = Execution::parallel);

/// LHN-II up to a constant factor: [D^-1 (I - (φ/λ_max) A)^-1 D^-1]_uv.
/// Pairs with a degree-0 endpoint score 0. Requires 0 < φ < 1.
std::vector<double> score_lhn2(const Graph& g, double phi, std::span<const NodePair> pairs,
                               Execution exec = Execution::parallel, double lambda_max = -1.0);

/// Local random walk: q_u π_uv(t) + q_v π_vu(t), q_u = k_u / 2M, π_u(l) =
/// Pᵀ π_u(l-1), degree-0 nodes self-absorbing. Requires t ≥ 1.
std::vector<double> score_lrw(const Graph& g, int t, std::span<const NodePair> pairs,
                              Execution exec = Execution::parallel);
/// Superposed random walk: Σ_{l=1..t} of the LRW term at step l.
std::vector<double> score_srw(const Graph& g, int t, std::span<const NodePair> pairs,
                              Execution exec = Execution::parallel);
/// LRW (superposed = false) or SRW at several step counts in one walk.
std::vector<std::vector<double>> score_walk_grid(const Graph& g, std::span<const int> steps, bool superposed,
                                                 std::span<const NodePair> pairs,
                                                 Execution exec = Execution::parallel);

/// Random walk with restart: π_uv + π_vu where π_u = c Pᵀ π_u + (1-c) e_u.
enum class RwrMethod {
  direct,       ///< sparse LDLᵀ of the symmetrized system (D - cA)
  fixed_point,  ///< power iteration to an L1 residual below `tol`
};
struct RwrOptions {
  RwrMethod method = RwrMethod::direct;
  double tol = 1e-10;
  /// Fixed-point iteration cap; 0 selects 10·log(1/tol)/log(1/c).
  std::size_t max_iter = 0;
};
std::vector<double> score_rwr(const Graph& g, double c, std::span<const NodePair> pairs,
                              Execution exec = Execution::parallel, const RwrOptions& opts = {});

/// Transferred similarity: S = (I - λ Ŝ0)^-1 S0 with S0 the common-neighbor
/// (TSCN) or Adamic-Adar (TSAA) matrix and Ŝ0 its row normalization. The
/// pair score is (S_uv + S_vu)/2. Requires 0 < λ < 1.
std::vector<double> score_tscn(const Graph& g, double lambda, std::span<const NodePair> pairs,
                               Execution exec = Execution::parallel);
std::vector<double> score_tsaa(const Graph& g, double lambda, std::span<const NodePair> pairs,
                               Execution exec = Execution::parallel);

/// Text dump "u v score" with node labels, in pair order.
std::string format_scores(const Graph& g, std::span<const NodePair> pairs, std::span<const double> scores);

}  // namespace lpleak
