#pragma once
#include <cstdint>
#include <string>

#include "lpleak/graph.hpp"

namespace lpleak {

/// Nested partition of a graph's edges into train (E_T), validation (E_V)
/// and test (E_P). The two-set protocol trains on E_T ∪ E_V; the three-set
/// protocol trains on E_T and tunes on E_V. Both evaluate on the same E_P.
struct SplitBundle {
  EdgeList train;
  EdgeList validation;
  EdgeList test;
  double rho = 0.0;
  std::uint64_t seed = 0;

  /// E_T' = E_T ∪ E_V, sorted.
  EdgeList full_train() const;

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;
};

struct SplitSizes {
  std::size_t train = 0;
  std::size_t validation = 0;
  std::size_t test = 0;
};

/// |E_P| = round(ρM), |E_V| = round((ρ-ρ²)M), |E_T| = the remainder.
SplitSizes split_sizes(std::size_t m, double rho);

/// Seeded nested split. Throws ArgumentError for ρ outside (0,1) and
/// SplitError when any part would be empty.
SplitBundle nested_split(const Graph& g, double rho, std::uint64_t seed);

/// Same node set as `g`, only the `kept` edges. Throws ArgumentError if an
/// edge of `kept` is not in `g`.
Graph training_graph(const Graph& g, std::span<const Edge> kept);

/// `count` distinct unordered pairs that are not edges of `g`, sampled
/// uniformly without replacement. `g` must be the FULL graph.
PairList sample_nonexistent_pairs(const Graph& g, std::size_t count, std::uint64_t seed);

/// Negative pairs for one run: disjoint test and validation samples sized
/// like E_P and E_V, drawn from the full graph's non-edges.
struct NegativeSample {
  PairList test;
  PairList validation;
};

NegativeSample draw_negatives(const Graph& g, const SplitBundle& bundle, std::uint64_t seed);

/// Writes train.txt, validation.txt, test.txt (one "u v" label line per
/// edge) and manifest.json into `dir`.
void export_split(const Graph& g, const SplitBundle& bundle, const std::string& dir);

/// JSON manifest: rho, seed, and part sizes.
std::string split_manifest(const SplitBundle& bundle);

}  // namespace lpleak
