#include "lpleak/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "lpleak/error.hpp"

namespace lpleak {

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges) : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw ArgumentError("edge endpoint out of range");
    if (e.u != e.v) edges_.push_back(e.canonical());
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
  adjacency_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted by (u, v), so each list fills in ascending order except
  // for the "v side", which we sort below.
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t i = 0; i < n; ++i)
    std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1]);
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> k(node_count());
  for (std::size_t u = 0; u < k.size(); ++u) k[u] = degree(NodeId(u));
  return k;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  auto nb = degree(u) <= degree(v) ? neighbors(u) : neighbors(v);
  NodeId target = degree(u) <= degree(v) ? v : u;
  return std::binary_search(nb.begin(), nb.end(), target);
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits off up to two leading tokens; returns how many tokens the line has (capped at 3).
int tokenize(std::string_view line, std::string_view& a, std::string_view& b) {
  int count = 0;
  std::size_t i = 0;
  while (i < line.size() && count < 3) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (count == 0) a = line.substr(i, j - i);
    if (count == 1) b = line.substr(i, j - i);
    ++count;
    i = j;
  }
  return count;
}

}  // namespace

Graph parse_edge_list(std::istream& in, ParseReport* report) {
  ParseReport local;
  std::vector<std::string> labels;
  std::unordered_map<std::string, NodeId> ids;
  EdgeList edges;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.try_emplace(std::string(token), NodeId(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    std::size_t first = 0;
    while (first < view.size() && is_space(view[first])) ++first;
    if (first == view.size()) continue;
    if (view[first] == '#' || view[first] == '%') {
      ++local.comment_lines;
      continue;
    }
    std::string_view a, b;
    if (tokenize(view, a, b) < 2) throw ParseError("expected two node tokens", lineno);
    NodeId u = intern(a);
    NodeId v = intern(b);
    if (u == v) {
      ++local.self_loops;
      continue;
    }
    edges.push_back(Edge{u, v}.canonical());
  }
  if (edges.empty()) throw ParseError("edge list contains no edges", 0);

  std::size_t raw = edges.size();
  Graph g(std::move(labels), edges);
  local.duplicates = raw - g.edge_count();
  if (report) *report = local;
  return g;
}

Graph parse_edge_list(std::string_view text, ParseReport* report) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, report);
}

Graph read_edge_list(const std::string& path, ParseReport* report) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open edge list: " + path);
  return parse_edge_list(in, report);
}

std::string format_edge_list(const Graph& g) {
  // Node k is introduced by its first edge to a lower id; nodes without one
  // are introduced by a self-loop line, which the parser drops.
  std::string out;
  for (NodeId k = 0; k < g.node_count(); ++k) {
    bool introduced = false;
    for (NodeId u : g.neighbors(k)) {
      if (u >= k) break;
      out += g.label(u);
      out += ' ';
      out += g.label(k);
      out += '\n';
      introduced = true;
    }
    if (!introduced) {
      out += g.label(k);
      out += ' ';
      out += g.label(k);
      out += '\n';
    }
  }
  return out;
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.n = g.node_count();
  s.m = g.edge_count();
  if (s.n > 0) s.mean_degree = 2.0 * double(s.m) / double(s.n);
  if (s.n > 1) s.density = 2.0 * double(s.m) / (double(s.n) * double(s.n - 1));
  return s;
}

void check_node(const Graph& g, NodeId u) {
  if (u >= g.node_count())
    throw ArgumentError("node id " + std::to_string(u) + " out of range (N=" + std::to_string(g.node_count()) + ")");
}

std::size_t common_neighbors(const Graph& g, NodeId u, NodeId v) {
  check_node(g, u);
  check_node(g, v);
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace lpleak
