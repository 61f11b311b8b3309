#include "lpleak/generators.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "lpleak/error.hpp"
#include "lpleak/random.hpp"

namespace lpleak::gen {
namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

std::uint64_t max_edges(std::size_t n) { return std::uint64_t(n) * (n ? n - 1 : 0) / 2; }

// Adds distinct random pairs (optionally restricted by `accept`) until `edges` has `target` entries.
template <class Accept>
void add_random_pairs(std::size_t n, std::size_t target, EdgeList& edges, std::unordered_set<std::uint64_t>& seen,
                      Rng& rng, Accept accept) {
  while (edges.size() < target) {
    NodeId u = NodeId(uniform_index(rng, n));
    NodeId v = NodeId(uniform_index(rng, n));
    if (u == v || !accept(u, v)) continue;
    NodePair p = NodePair{u, v}.canonical();
    if (seen.insert(pair_key(p)).second) edges.push_back(p);
  }
}

}  // namespace

Graph erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m > max_edges(n)) throw ArgumentError("G(n,m): too many edges requested");
  Rng rng(seed);
  EdgeList edges;
  if (m * 2 > max_edges(n)) {
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
    for (std::size_t i = 0; i < m; ++i) std::swap(edges[i], edges[i + uniform_index(rng, edges.size() - i)]);
    edges.resize(m);
  } else {
    std::unordered_set<std::uint64_t> seen;
    add_random_pairs(n, m, edges, seen, rng, [](NodeId, NodeId) { return true; });
  }
  return Graph(numeric_labels(n), edges);
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  EdgeList edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (uniform_real(rng) < p) edges.push_back({u, v});
  return Graph(numeric_labels(n), edges);
}

Graph powerlaw_cluster(std::size_t n, std::size_t m, double triad_p, std::uint64_t seed) {
  // Largest per-node link count L whose seed clique + L links per node fits in m.
  std::size_t links = 1;
  auto base = [n](std::size_t l) { return (l + 1) * l / 2 + (n - l - 1) * l; };
  while (links + 2 < n && base(links + 1) <= m) ++links;
  if (n < links + 2 || base(links) > m) throw ArgumentError("powerlaw_cluster: m too small for n");
  const std::size_t core = links + 1;
  const std::size_t grown = n - core;
  std::size_t extra = m - base(links);
  if (extra > grown * (links + 1)) throw ArgumentError("powerlaw_cluster: m too large for n");

  Rng rng(seed);
  std::vector<std::vector<NodeId>> adj(n);
  std::vector<NodeId> pool;  // each node repeated once per incident edge
  EdgeList edges;
  auto link = [&](NodeId a, NodeId b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
    pool.push_back(a);
    pool.push_back(b);
    edges.push_back(NodePair{a, b}.canonical());
  };
  auto linked = [&](NodeId a, NodeId b) { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); };

  for (NodeId u = 0; u < core; ++u)
    for (NodeId v = u + 1; v < core; ++v) link(u, v);

  for (std::size_t i = 0; i < grown; ++i) {
    const NodeId x = NodeId(core + i);
    std::size_t want = links + extra / grown + (i < extra % grown ? 1 : 0);
    want = std::min<std::size_t>(want, x);
    NodeId last = NodeId(-1);
    std::size_t made = 0;
    while (made < want) {
      NodeId target;
      if (last != NodeId(-1) && uniform_real(rng) < triad_p && !adj[last].empty()) {
        target = adj[last][uniform_index(rng, adj[last].size())];
      } else {
        target = pool[uniform_index(rng, pool.size())];
      }
      if (target == x || linked(x, target)) {
        // Fall back to a uniform pick so dense targets cannot stall growth.
        target = NodeId(uniform_index(rng, x));
        if (linked(x, target)) continue;
      }
      link(x, target);
      last = target;
      ++made;
    }
  }
  return Graph(numeric_labels(n), edges);
}

Graph geometric(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (n < 2 || m > max_edges(n)) throw ArgumentError("geometric: bad size");
  Rng rng(seed);
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = uniform_real(rng);
    y[i] = uniform_real(rng);
  }
  auto dist2 = [&](std::size_t a, std::size_t b) {
    double dx = x[a] - x[b], dy = y[a] - y[b];
    return dx * dx + dy * dy;
  };

  struct Candidate {
    double d2;
    NodePair p;
  };
  // Radius with about 3m expected pairs; doubled until enough candidates exist.
  double r = std::sqrt(6.0 * double(m) / (M_PI * double(n) * double(n)));
  std::vector<Candidate> cand;
  for (;;) {
    cand.clear();
    const std::size_t cells = std::max<std::size_t>(1, std::size_t(1.0 / r));
    std::vector<std::vector<NodeId>> grid(cells * cells);
    auto cell_of = [&](double c) { return std::min(cells - 1, std::size_t(c * double(cells))); };
    for (NodeId i = 0; i < n; ++i) grid[cell_of(y[i]) * cells + cell_of(x[i])].push_back(i);
    for (NodeId i = 0; i < n; ++i) {
      std::size_t cx = cell_of(x[i]), cy = cell_of(y[i]);
      for (std::size_t gy = cy ? cy - 1 : 0; gy <= std::min(cells - 1, cy + 1); ++gy)
        for (std::size_t gx = cx ? cx - 1 : 0; gx <= std::min(cells - 1, cx + 1); ++gx)
          for (NodeId j : grid[gy * cells + gx])
            if (j > i && dist2(i, j) < r * r) cand.push_back({dist2(i, j), {i, j}});
    }
    if (cand.size() >= m + n || r >= 1.5) break;
    r *= 2.0;
  }
  std::sort(cand.begin(), cand.end(), [](const Candidate& a, const Candidate& b) {
    return a.d2 < b.d2 || (a.d2 == b.d2 && a.p < b.p);
  });

  // Nearest-neighbor edges first, so no node is isolated.
  std::vector<NodeId> nearest(n, NodeId(-1));
  std::vector<double> best(n, 1e300);
  for (const Candidate& c : cand) {
    if (c.d2 < best[c.p.u]) best[c.p.u] = c.d2, nearest[c.p.u] = c.p.v;
    if (c.d2 < best[c.p.v]) best[c.p.v] = c.d2, nearest[c.p.v] = c.p.u;
  }
  for (NodeId i = 0; i < n; ++i)
    if (nearest[i] == NodeId(-1))
      for (NodeId j = 0; j < n; ++j)
        if (j != i && dist2(i, j) < best[i]) best[i] = dist2(i, j), nearest[i] = j;

  std::unordered_set<std::uint64_t> seen;
  std::vector<Candidate> nn;
  for (NodeId i = 0; i < n; ++i) {
    NodePair p = NodePair{i, nearest[i]}.canonical();
    if (seen.insert(pair_key(p)).second) nn.push_back({best[i], p});
  }
  std::sort(nn.begin(), nn.end(), [](const Candidate& a, const Candidate& b) { return a.d2 < b.d2; });
  EdgeList edges;
  for (const Candidate& c : nn)
    if (edges.size() < m) edges.push_back(c.p);
  for (const Candidate& c : cand) {
    if (edges.size() >= m) break;
    if (seen.insert(pair_key(c.p)).second) edges.push_back(c.p);
  }
  if (edges.size() < m) {
    std::unordered_set<std::uint64_t> all;
    for (const Edge& e : edges) all.insert(pair_key(e));
    add_random_pairs(n, m, edges, all, rng, [](NodeId, NodeId) { return true; });
  }
  return Graph(numeric_labels(n), edges);
}

Graph planted_partition(std::size_t n, std::size_t m, std::size_t blocks, double p_in, std::uint64_t seed) {
  if (blocks == 0 || blocks > n) throw ArgumentError("planted_partition: bad block count");
  auto block = [&](NodeId u) { return std::size_t(u) * blocks / n; };
  std::uint64_t inside_cap = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::size_t size = (b + 1) * n / blocks - b * n / blocks;
    inside_cap += max_edges(size);
  }
  std::size_t m_in = std::size_t(std::llround(p_in * double(m)));
  if (m_in > inside_cap || m - m_in > max_edges(n) - inside_cap)
    throw ArgumentError("planted_partition: infeasible edge split");
  Rng rng(seed);
  EdgeList edges;
  std::unordered_set<std::uint64_t> seen;
  add_random_pairs(n, m_in, edges, seen, rng, [&](NodeId u, NodeId v) { return block(u) == block(v); });
  add_random_pairs(n, m, edges, seen, rng, [&](NodeId u, NodeId v) { return block(u) != block(v); });
  return Graph(numeric_labels(n), edges);
}

Graph complete(std::size_t n) {
  EdgeList edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(numeric_labels(n), edges);
}

Graph path(std::size_t n) {
  EdgeList edges;
  for (NodeId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph(numeric_labels(n), edges);
}

Graph star(std::size_t leaves) {
  EdgeList edges;
  for (NodeId u = 1; u <= leaves; ++u) edges.push_back({0, u});
  return Graph(numeric_labels(leaves + 1), edges);
}

Graph permute(const Graph& g, std::span<const NodeId> perm) {
  if (perm.size() != g.node_count()) throw ArgumentError("permutation size mismatch");
  std::vector<std::string> labels(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) labels[perm[u]] = g.label(u);
  EdgeList edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(std::move(labels), edges);
}

}  // namespace lpleak::gen
