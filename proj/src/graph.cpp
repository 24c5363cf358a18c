#include "tg/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>

namespace tg {

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw validation_error("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n) * n, 0);
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw validation_error("loop edge {" + std::to_string(a) + "," +
                                       std::to_string(b) + "} rejected");
    if (a < 1 || a > n || b < 1 || b > n)
      throw validation_error("edge endpoint out of range [1," + std::to_string(n) +
                             "]: {" + std::to_string(a) + "," + std::to_string(b) + "}");
    if (a > b) std::swap(a, b);
    canon.emplace_back(a, b);
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  for (auto [a, b] : canon) {
    g.adj_[static_cast<std::size_t>(a - 1) * n + (b - 1)] = 1;
    g.adj_[static_cast<std::size_t>(b - 1) * n + (a - 1)] = 1;
  }
  g.edges_ = std::move(canon);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 1 || v > n_)
    throw validation_error("vertex id " + std::to_string(v) + " out of range [1," +
                           std::to_string(n_) + "]");
}

bool Graph::adjacent(int a, int b) const {
  check_vertex(a);
  check_vertex(b);
  return adj_[static_cast<std::size_t>(a - 1) * n_ + (b - 1)] != 0;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  const char* row = adj_.data() + static_cast<std::size_t>(v - 1) * n_;
  for (int i = 0; i < n_; ++i) d += row[i];
  return d;
}

int Graph::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{a, b});
  if (it == edges_.end() || *it != Edge{a, b}) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::queue<int> bfs;
  bfs.push(1);
  seen[0] = 1;
  int reached = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    const char* row = adj_.data() + static_cast<std::size_t>(v - 1) * n_;
    for (int i = 0; i < n_; ++i) {
      if (row[i] && !seen[i]) {
        seen[i] = 1;
        ++reached;
        bfs.push(i + 1);
      }
    }
  }
  return reached == n_;
}

Graph parse_edge_list(std::istream& in, std::vector<std::string>* warnings) {
  std::string line;
  int lineno = 0;
  int n = -1;
  long m = -1;
  std::vector<Edge> edges;
  std::vector<Edge> seen;  // canonical forms already parsed
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw parse_error("line " + std::to_string(lineno) + ": expected header \"n m\"");
      std::string rest;
      if (ls >> rest)
        throw parse_error("line " + std::to_string(lineno) + ": trailing content after header");
      continue;
    }
    int a = 0, b = 0;
    if (!(ls >> a >> b))
      throw parse_error("line " + std::to_string(lineno) + ": expected edge \"a b\"");
    std::string rest;
    if (ls >> rest)
      throw parse_error("line " + std::to_string(lineno) + ": trailing content after edge");
    if (a == b)
      throw validation_error("line " + std::to_string(lineno) + ": loop edge " +
                             std::to_string(a) + " " + std::to_string(b));
    if (a < 1 || a > n || b < 1 || b > n)
      throw validation_error("line " + std::to_string(lineno) + ": endpoint out of range");
    Edge canon{std::min(a, b), std::max(a, b)};
    if (std::find(seen.begin(), seen.end(), canon) != seen.end()) {
      if (warnings)
        warnings->push_back("line " + std::to_string(lineno) + ": duplicate edge {" +
                            std::to_string(canon.first) + "," +
                            std::to_string(canon.second) + "} ignored");
      continue;
    }
    seen.push_back(canon);
    edges.push_back(canon);
  }
  if (n < 0) throw parse_error("empty input: missing header line \"n m\"");
  if (static_cast<long>(edges.size()) != m && warnings)
    warnings->push_back("header declared " + std::to_string(m) + " edges, got " +
                        std::to_string(edges.size()));
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_edge_list(in, warnings);
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (!g.adjacent(a, b)) edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed, bool require_connected) {
  if (n < 1) throw validation_error("random_graph requires n >= 1");
  if (edge_prob < 0.0 || edge_prob > 1.0)
    throw validation_error("edge_prob must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_prob);
  constexpr int kMaxRetries = 10000;
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<Edge> edges;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        if (coin(rng)) edges.emplace_back(a, b);
    Graph g = Graph::from_edges(n, edges);
    if (!require_connected || g.connected()) return g;
  }
  throw generation_error("no connected graph found for n=" + std::to_string(n) +
                         ", edge_prob=" + std::to_string(edge_prob) + " within retry bound");
}

std::uint64_t graph_fingerprint(const Graph& g) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(g.vertex_count()));
  mix(static_cast<std::uint64_t>(g.edge_count()));
  for (auto [a, b] : g.edges()) {
    mix(static_cast<std::uint64_t>(a));
    mix(static_cast<std::uint64_t>(b));
  }
  return h;
}

}  // namespace tg
