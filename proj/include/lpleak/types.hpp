#pragma once
#include <cstdint>
#include <utility>
#include <vector>

namespace lpleak {

using NodeId = std::uint32_t;

/// Unordered node pair. Edges and query pairs share this type; `canonical()`
/// orders the endpoints so that u < v.
struct NodePair {
  NodeId u = 0;
  NodeId v = 0;

  constexpr NodePair canonical() const noexcept { return u <= v ? *this : NodePair{v, u}; }
  friend constexpr bool operator==(const NodePair&, const NodePair&) = default;
  friend constexpr auto operator<=>(const NodePair&, const NodePair&) = default;
};

using Edge = NodePair;
using EdgeList = std::vector<Edge>;
using PairList = std::vector<NodePair>;

/// Orientation-independent 64-bit key of an unordered pair.
inline std::uint64_t pair_key(NodePair p) noexcept {
  const auto c = p.canonical();
  return (std::uint64_t(c.u) << 32) | c.v;
}

/// Serial reference or OpenMP-parallel execution of a kernel. Both produce
/// bit-identical results for deterministic kernels.
enum class Execution { serial, parallel };

}  // namespace lpleak
