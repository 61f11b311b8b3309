#include "lpleak/split.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "lpleak/error.hpp"
#include "lpleak/random.hpp"

namespace lpleak {

EdgeList SplitBundle::full_train() const {
  EdgeList out;
  out.reserve(train.size() + validation.size());
  std::merge(train.begin(), train.end(), validation.begin(), validation.end(), std::back_inserter(out));
  return out;
}

SplitSizes split_sizes(std::size_t m, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) throw ArgumentError("rho must lie in (0,1), got " + std::to_string(rho));
  SplitSizes s;
  s.test = std::size_t(std::llround(rho * double(m)));
  s.validation = std::size_t(std::llround((rho - rho * rho) * double(m)));
  if (s.test + s.validation > m) throw SplitError("split leaves no training edges");
  s.train = m - s.test - s.validation;
  return s;
}

SplitBundle nested_split(const Graph& g, double rho, std::uint64_t seed) {
  const SplitSizes sizes = split_sizes(g.edge_count(), rho);
  if (sizes.train == 0 || sizes.validation == 0 || sizes.test == 0)
    throw SplitError("split of M=" + std::to_string(g.edge_count()) + " at rho=" + std::to_string(rho) +
                     " leaves an empty part");

  EdgeList edges(g.edges().begin(), g.edges().end());
  Rng shuffle_rng(derive_seed(seed, seed_stream::test_shuffle));
  shuffle(std::span(edges), shuffle_rng);

  SplitBundle b;
  b.rho = rho;
  b.seed = seed;
  b.test.assign(edges.begin(), edges.begin() + std::ptrdiff_t(sizes.test));

  // Second draw over the remainder E_T' picks the validation edges.
  std::span<Edge> rest(edges.data() + sizes.test, edges.size() - sizes.test);
  Rng val_rng(derive_seed(seed, seed_stream::validation_draw));
  shuffle(rest, val_rng);
  b.validation.assign(rest.begin(), rest.begin() + std::ptrdiff_t(sizes.validation));
  b.train.assign(rest.begin() + std::ptrdiff_t(sizes.validation), rest.end());

  std::sort(b.test.begin(), b.test.end());
  std::sort(b.validation.begin(), b.validation.end());
  std::sort(b.train.begin(), b.train.end());
  return b;
}

Graph training_graph(const Graph& g, std::span<const Edge> kept) {
  for (const Edge& e : kept)
    if (!g.has_edge(e.u, e.v))
      throw ArgumentError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not in the graph");
  return Graph(std::vector<std::string>(g.labels().begin(), g.labels().end()), kept);
}

PairList sample_nonexistent_pairs(const Graph& g, std::size_t count, std::uint64_t seed) {
  const std::uint64_t n = g.node_count();
  const std::uint64_t total = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t available = total - g.edge_count();
  if (count > available)
    throw SplitError("requested " + std::to_string(count) + " non-edges but only " + std::to_string(available) +
                     " exist");
  PairList out;
  out.reserve(count);
  if (count == 0) return out;
  Rng rng(seed);

  if (count * 4 <= available) {
    // Sparse request: rejection sampling.
    std::unordered_set<std::uint64_t> taken;
    taken.reserve(count * 2);
    while (out.size() < count) {
      NodeId u = NodeId(uniform_index(rng, n));
      NodeId v = NodeId(uniform_index(rng, n));
      if (u == v || g.has_edge(u, v)) continue;
      NodePair p = NodePair{u, v}.canonical();
      if (taken.insert(pair_key(p)).second) out.push_back(p);
    }
    return out;
  }

  // Dense request: enumerate the complement, partial Fisher-Yates.
  PairList all;
  all.reserve(available);
  for (NodeId u = 0; u < n; ++u) {
    auto nb = g.neighbors(u);
    auto it = std::upper_bound(nb.begin(), nb.end(), u);
    for (NodeId v = u + 1; v < n; ++v) {
      if (it != nb.end() && *it == v) {
        ++it;
        continue;
      }
      all.push_back({u, v});
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + uniform_index(rng, all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(count);
  return all;
}

NegativeSample draw_negatives(const Graph& g, const SplitBundle& bundle, std::uint64_t seed) {
  const std::size_t nt = bundle.test.size();
  const std::size_t nv = bundle.validation.size();
  PairList pool = sample_nonexistent_pairs(g, nt + nv, derive_seed(seed, seed_stream::negatives));
  NegativeSample s;
  s.test.assign(pool.begin(), pool.begin() + std::ptrdiff_t(nt));
  s.validation.assign(pool.begin() + std::ptrdiff_t(nt), pool.end());
  return s;
}

std::string split_manifest(const SplitBundle& b) {
  nlohmann::ordered_json j;
  j["rho"] = b.rho;
  j["seed"] = b.seed;
  j["train"] = b.train.size();
  j["validation"] = b.validation.size();
  j["test"] = b.test.size();
  j["full_train"] = b.train.size() + b.validation.size();
  return j.dump();
}

void export_split(const Graph& g, const SplitBundle& b, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  auto write = [&](const std::string& name, const EdgeList& edges) {
    std::ofstream out(fs::path(dir) / name);
    if (!out) throw ConfigError("cannot write " + (fs::path(dir) / name).string());
    for (const Edge& e : edges) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  };
  write("train.txt", b.train);
  write("validation.txt", b.validation);
  write("test.txt", b.test);
  std::ofstream m(fs::path(dir) / "manifest.json");
  if (!m) throw ConfigError("cannot write manifest in " + dir);
  m << split_manifest(b) << '\n';
}

}  // namespace lpleak
