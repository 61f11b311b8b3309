#include <cmath>
#include <vector>

#include "lpleak/indices.hpp"

namespace lpleak {

double spectral_radius(const Graph& g, double tol, std::size_t max_iter) {
  const std::size_t n = g.node_count();
  if (g.edge_count() == 0) return 0.0;

  // Iterate on A + I: its dominant eigenvalue is λ_max + 1 even when -λ_max
  // is also an eigenvalue of A (bipartite components).
  std::vector<double> x(n, 1.0 / std::sqrt(double(n)));
  std::vector<double> y(n);
  double estimate = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    for (NodeId u = 0; u < n; ++u) {
      double s = x[u];
      for (NodeId v : g.neighbors(u)) s += x[v];
      y[u] = s;
    }
    // Rayleigh quotient of A + I and the residual ‖(A+I)x - θx‖ for unit x.
    double theta = 0.0, norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      theta += x[i] * y[i];
      norm2 += y[i] * y[i];
    }
    const double residual = std::sqrt(std::max(0.0, norm2 - theta * theta));
    estimate = theta - 1.0;
    const double norm = std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    // For symmetric matrices the Rayleigh quotient error is O(residual²/gap);
    // stopping on the residual itself is conservative.
    if (residual <= tol * theta) break;
  }
  return estimate;
}

}  // namespace lpleak
