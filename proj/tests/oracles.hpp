// Dense reference implementations for the sparse kernels. Plain nested
// vectors and textbook algorithms only, so they share no code with src/.
#pragma once
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "lpleak/graph.hpp"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense zeros(std::size_t n) { return Dense(n, std::vector<double>(n, 0.0)); }

inline Dense identity(std::size_t n) {
  Dense m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Dense adjacency(const lpleak::Graph& g) {
  Dense a = zeros(g.node_count());
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1.0;
  return a;
}

inline std::vector<double> degrees(const Dense& a) {
  std::vector<double> k(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (double x : a[i]) k[i] += x;
  return k;
}

inline Dense mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0.0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

inline Dense transpose(const Dense& a) {
  Dense t = zeros(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline Dense power(const Dense& a, int t) {
  Dense r = identity(a.size());
  for (int i = 0; i < t; ++i) r = mul(r, a);
  return r;
}

// Gauss-Jordan with partial pivoting.
inline Dense inverse(Dense a) {
  const std::size_t n = a.size();
  Dense inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-300) throw std::runtime_error("singular matrix");
    std::swap(a[col], a[piv]);
    std::swap(inv[col], inv[piv]);
    const double d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0.0) continue;
      const double f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> symmetric_eigenvalues(Dense a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline double spectral_radius(const lpleak::Graph& g) {
  auto ev = symmetric_eigenvalues(adjacency(g));
  double r = 0.0;
  for (double x : ev) r = std::max(r, std::abs(x));
  return r;
}

// Row-stochastic transition matrix; degree-0 rows stay put.
inline Dense transition(const Dense& a) {
  const auto k = degrees(a);
  Dense p = zeros(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (k[i] == 0.0) p[i][i] = 1.0;
    else
      for (std::size_t j = 0; j < a.size(); ++j) p[i][j] = a[i][j] / k[i];
  }
  return p;
}

inline Dense katz(const lpleak::Graph& g, double beta) {
  const std::size_t n = g.node_count();
  Dense m = identity(n);
  const Dense a = adjacency(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] -= beta * a[i][j];
  Dense s = inverse(m);
  for (std::size_t i = 0; i < n; ++i) s[i][i] -= 1.0;
  return s;
}

inline Dense lhn2(const lpleak::Graph& g, double phi) {
  const std::size_t n = g.node_count();
  const double lambda = oracle::spectral_radius(g);
  const Dense a = adjacency(g);
  const auto k = degrees(a);
  Dense m = identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] -= phi / lambda * a[i][j];
  Dense s = inverse(m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) s[i][j] = k[i] && k[j] ? s[i][j] / (k[i] * k[j]) : 0.0;
  return s;
}

inline Dense lp(const lpleak::Graph& g, double eps) {
  const Dense a = adjacency(g);
  const Dense a2 = mul(a, a), a3 = mul(a2, a);
  Dense s = zeros(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) s[i][j] = a2[i][j] + eps * a3[i][j];
  return s;
}

// Σ_{l ∈ steps} q_u (P^l)_uv + q_v (P^l)_vu
inline Dense walk(const lpleak::Graph& g, int from, int to) {
  const Dense a = adjacency(g);
  const auto k = degrees(a);
  const double two_m = 2.0 * double(g.edge_count());
  const Dense p = transition(a);
  Dense s = zeros(a.size());
  Dense pl = power(p, from);
  for (int l = from; l <= to; ++l) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) s[i][j] += k[i] / two_m * pl[i][j] + k[j] / two_m * pl[j][i];
    pl = mul(pl, p);
  }
  return s;
}
inline Dense lrw(const lpleak::Graph& g, int t) { return walk(g, t, t); }
inline Dense srw(const lpleak::Graph& g, int t) { return walk(g, 1, t); }

// π_uv = (1-c) [(I - c Pᵀ)^-1]_vu; score π_uv + π_vu.
inline Dense rwr(const lpleak::Graph& g, double c) {
  const Dense pt = transpose(transition(adjacency(g)));
  const std::size_t n = pt.size();
  Dense m = identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] -= c * pt[i][j];
  const Dense inv = inverse(m);
  Dense s = zeros(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) s[u][v] = (1.0 - c) * (inv[v][u] + inv[u][v]);
  return s;
}

inline Dense cn(const lpleak::Graph& g) {
  const Dense a = adjacency(g);
  Dense s = mul(a, a);
  for (std::size_t i = 0; i < s.size(); ++i) s[i][i] = 0.0;
  return s;
}

inline Dense aa(const lpleak::Graph& g) {
  const Dense a = adjacency(g);
  const auto k = degrees(a);
  Dense s = zeros(a.size());
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < a.size(); ++v) {
      if (u == v) continue;
      for (std::size_t z = 0; z < a.size(); ++z)
        if (a[u][z] != 0.0 && a[v][z] != 0.0) s[u][v] += 1.0 / std::log(k[z]);
    }
  return s;
}

// (S_uv + S_vu)/2 with S = (I - λ Ŝ0)^-1 S0.
inline Dense transfer(const Dense& s0, double lambda) {
  const std::size_t n = s0.size();
  const auto rs = degrees(s0);
  Dense m = identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rs[i] > 0.0) m[i][j] -= lambda * s0[i][j] / rs[i];
  const Dense s = mul(inverse(m), s0);
  Dense out = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = 0.5 * (s[i][j] + s[j][i]);
  return out;
}

// Brute-force AUC over every positive-negative comparison.
inline double auc(const std::vector<double>& pos, const std::vector<double>& neg) {
  double acc = 0.0;
  for (double p : pos)
    for (double q : neg) acc += p > q ? 1.0 : (p == q ? 0.5 : 0.0);
  return acc / (double(pos.size()) * double(neg.size()));
}

// All distinct unordered pairs u < v.
inline lpleak::PairList all_pairs(std::size_t n) {
  lpleak::PairList out;
  for (lpleak::NodeId u = 0; u < n; ++u)
    for (lpleak::NodeId v = u + 1; v < n; ++v) out.push_back({u, v});
  return out;
}

inline double max_deviation(const Dense& oracle, const lpleak::PairList& pairs, const std::vector<double>& scores) {
  double worst = 0.0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    worst = std::max(worst, std::abs(oracle[pairs[i].u][pairs[i].v] - scores[i]));
  return worst;
}

}  // namespace oracle
