#pragma once
#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpleak/types.hpp"

namespace lpleak {

/// Immutable undirected simple graph in compressed sparse row form.
///
/// Internal ids are dense (0..N-1); neighbor lists are sorted ascending.
/// Original string labels are kept so results can be reported in the
/// vocabulary of the input file. Safe to share across threads.
class Graph {
 public:
  Graph() = default;

  /// Build from edges over nodes 0..labels.size()-1. Self-loops and
  /// duplicates (in either orientation) are dropped.
  Graph(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId u) const {
    return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }
  std::span<const std::size_t> offsets() const noexcept { return offsets_; }
  std::span<const NodeId> adjacency() const noexcept { return adjacency_; }
  std::vector<std::size_t> degrees() const;

  /// Canonical edges (u < v), sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_edge(NodeId u, NodeId v) const;

  const std::string& label(NodeId u) const { return labels_[u]; }
  std::span<const std::string> labels() const noexcept { return labels_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  EdgeList edges_;
};

struct GraphStats {
  std::size_t n = 0;
  std::size_t m = 0;
  double mean_degree = 0.0;  ///< 2M/N
  double density = 0.0;      ///< 2M/(N(N-1))
};

/// Counts of input lines dropped while parsing.
struct ParseReport {
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
  std::size_t comment_lines = 0;
};

/// Parse a whitespace-separated edge list. Lines beginning with '#' or '%'
/// are comments; columns after the first two (weights, timestamps) are
/// ignored. Labels get dense ids in first-seen order, and a node named only
/// on a self-loop line is kept as an isolated node.
Graph parse_edge_list(std::istream& in, ParseReport* report = nullptr);
Graph parse_edge_list(std::string_view text, ParseReport* report = nullptr);
Graph read_edge_list(const std::string& path, ParseReport* report = nullptr);

/// Render `g` so that parse_edge_list reproduces it exactly, including node
/// order and isolated nodes (introduced by self-loop lines).
std::string format_edge_list(const Graph& g);

GraphStats stats(const Graph& g);

/// |N(u) ∩ N(v)| by sorted-list intersection.
std::size_t common_neighbors(const Graph& g, NodeId u, NodeId v);

/// Throws ArgumentError unless u < node_count().
void check_node(const Graph& g, NodeId u);

}  // namespace lpleak
