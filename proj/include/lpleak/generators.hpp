#pragma once
#include <cstdint>

#include "lpleak/graph.hpp"

namespace lpleak::gen {

/// G(n, m): m distinct edges chosen uniformly. Labels are "0".."n-1".
Graph erdos_renyi(std::size_t n, std::size_t m, std::uint64_t seed);

/// G(n, p) with independent edge probability p.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// Holme-Kim growth: each new node attaches `links` edges by preferential
/// attachment, each followed by a triad-closure step with probability
/// `triad_p`. Trimmed or topped up with random closures to exactly `m` edges.
Graph powerlaw_cluster(std::size_t n, std::size_t m, double triad_p, std::uint64_t seed);

/// Points in the unit square; every node is joined to its nearest neighbor,
/// then the shortest remaining pairs are added until the graph has `m` edges.
/// Road- and grid-like sparse graphs.
Graph geometric(std::size_t n, std::size_t m, std::uint64_t seed);

/// Planted partition with `blocks` equal groups; a fraction `p_in` of the m
/// edges falls inside groups.
Graph planted_partition(std::size_t n, std::size_t m, std::size_t blocks, double p_in, std::uint64_t seed);

Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t leaves);

/// Relabel node u as perm[u] (ids and labels both follow the permutation).
Graph permute(const Graph& g, std::span<const NodeId> perm);

}  // namespace lpleak::gen
