#pragma once
// Internal: per-source row evaluation shared by the similarity kernels.
#include <exception>
#include <span>
#include <vector>

#include <omp.h>

#include "lpleak/error.hpp"
#include "lpleak/graph.hpp"

namespace lpleak::detail {

/// How a pair score is assembled from per-source rows.
///   one:  row_u[v] with (u, v) the canonical orientation
///   sum:  row_u[v] + row_v[u]
///   mean: (row_u[v] + row_v[u]) / 2
enum class Side { one, sum, mean };

/// Pairs grouped by the source node whose row they read.
struct Incidence {
  struct Entry {
    std::size_t pair;
    NodeId other;
    std::uint8_t slot;
  };
  std::vector<NodeId> sources;       // distinct sources, ascending
  std::vector<std::size_t> offsets;  // into entries, per position in `sources`
  std::vector<Entry> entries;

  Incidence(const Graph& g, std::span<const NodePair> pairs, Side side) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> count(n + 1, 0);
    for (const NodePair& p : pairs) {
      check_node(g, p.u);
      check_node(g, p.v);
      if (p.u == p.v) throw ArgumentError("query pair with identical endpoints");
      const NodePair c = p.canonical();
      ++count[c.u + 1];
      if (side != Side::one) ++count[c.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) count[i + 1] += count[i];
    std::vector<Entry> by_node(count[n]);
    std::vector<std::size_t> cursor(count.begin(), count.end() - 1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const NodePair c = pairs[i].canonical();
      by_node[cursor[c.u]++] = {i, c.v, 0};
      if (side != Side::one) by_node[cursor[c.v]++] = {i, c.u, 1};
    }
    offsets.push_back(0);
    for (NodeId u = 0; u < n; ++u) {
      if (count[u + 1] == count[u]) continue;
      sources.push_back(u);
      entries.insert(entries.end(), by_node.begin() + std::ptrdiff_t(count[u]),
                     by_node.begin() + std::ptrdiff_t(count[u + 1]));
      offsets.push_back(entries.size());
    }
  }
};

/// Evaluate `width` score variants for every pair. `row(src, out, ws)` fills
/// out[k * n + v] with the k-th variant's row for source `src`; `make_ws()`
/// builds one scratch object per thread. Contributions land in fixed slots,
/// so serial and parallel execution give bit-identical scores.
template <class MakeWs, class RowFn>
std::vector<std::vector<double>> score_rows(const Graph& g, std::span<const NodePair> pairs, Side side,
                                            std::size_t width, Execution exec, MakeWs&& make_ws, RowFn&& row) {
  const std::size_t n = g.node_count();
  const std::size_t p = pairs.size();
  Incidence inc(g, pairs, side);
  std::vector<double> half(width * 2 * p, 0.0);
  const std::ptrdiff_t ns = std::ptrdiff_t(inc.sources.size());

  std::exception_ptr failure;

#pragma omp parallel if (exec == Execution::parallel && ns > 1)
  {
    auto ws = make_ws();
    std::vector<double> buf(width * n);
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < ns; ++i) {
      const NodeId src = inc.sources[std::size_t(i)];
      try {
        row(src, std::span<double>(buf), ws);
      } catch (...) {
#pragma omp critical(lpleak_kernel_failure)
        if (!failure) failure = std::current_exception();
        continue;
      }
      for (std::size_t e = inc.offsets[std::size_t(i)]; e < inc.offsets[std::size_t(i) + 1]; ++e) {
        const auto& en = inc.entries[e];
        for (std::size_t k = 0; k < width; ++k) half[(k * p + en.pair) * 2 + en.slot] = buf[k * n + en.other];
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::vector<double>> out(width, std::vector<double>(p));
  for (std::size_t k = 0; k < width; ++k)
    for (std::size_t i = 0; i < p; ++i) {
      const double a = half[(k * p + i) * 2];
      const double b = half[(k * p + i) * 2 + 1];
      out[k][i] = side == Side::one ? a : side == Side::sum ? a + b : 0.5 * (a + b);
    }
  return out;
}

template <class MakeWs, class RowFn>
std::vector<double> score_rows1(const Graph& g, std::span<const NodePair> pairs, Side side, Execution exec,
                                MakeWs&& make_ws, RowFn&& row) {
  return std::move(score_rows(g, pairs, side, 1, exec, make_ws, row)[0]);
}

struct NoWorkspace {};
inline NoWorkspace no_workspace() { return {}; }

}  // namespace lpleak::detail
