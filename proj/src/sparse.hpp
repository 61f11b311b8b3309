#pragma once
// Internal: Eigen-backed sparse symmetric systems.
#include <string>
#include <vector>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include "lpleak/error.hpp"
#include "lpleak/graph.hpp"

namespace lpleak::detail {

using SparseMatrix = Eigen::SparseMatrix<double>;
using Triplets = std::vector<Eigen::Triplet<double>>;

/// diag(d) - s * W, with W given as symmetric triplets (both orientations).
inline SparseMatrix shifted_system(std::size_t n, const std::vector<double>& diag, double s, const Triplets& w) {
  Triplets t;
  t.reserve(w.size() + n);
  for (std::size_t i = 0; i < n; ++i) t.emplace_back(int(i), int(i), diag[i]);
  for (const auto& e : w) t.emplace_back(e.row(), e.col(), -s * e.value());
  SparseMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

inline Triplets adjacency_triplets(const Graph& g) {
  Triplets t;
  t.reserve(2 * g.edge_count());
  for (const Edge& e : g.edges()) {
    t.emplace_back(int(e.u), int(e.v), 1.0);
    t.emplace_back(int(e.v), int(e.u), 1.0);
  }
  return t;
}

/// LDLᵀ factorization of a symmetric positive definite system; solve() is
/// const and safe to call concurrently.
class SpdSolver {
 public:
  explicit SpdSolver(const SparseMatrix& m, const char* what) {
    ldlt_.compute(m);
    if (ldlt_.info() != Eigen::Success) throw NumericalError(std::string("factorization failed: ") + what);
    const auto d = ldlt_.vectorD();
    for (Eigen::Index i = 0; i < d.size(); ++i)
      if (!(d[i] > 0.0)) throw NumericalError(std::string("system is not positive definite: ") + what);
  }

  /// x = M^-1 e_u
  void solve_unit(NodeId u, Eigen::VectorXd& rhs, Eigen::VectorXd& x) const {
    rhs.setZero();
    rhs[Eigen::Index(u)] = 1.0;
    x = ldlt_.solve(rhs);
  }

 private:
  Eigen::SimplicialLDLT<SparseMatrix> ldlt_;
};

struct SolveWorkspace {
  Eigen::VectorXd rhs;
  Eigen::VectorXd x;
  explicit SolveWorkspace(std::size_t n) : rhs(Eigen::Index(n)), x(Eigen::Index(n)) {}
};

}  // namespace lpleak::detail
