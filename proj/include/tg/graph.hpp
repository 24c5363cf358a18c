#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tg/errors.hpp"

namespace tg {

// Unordered vertex pair stored as (min, max). Vertex ids are 1-based.
using Edge = std::pair<int, int>;

/// Simple undirected graph. Immutable after construction; no loops, no
/// multi-edges. Edges are kept in canonical (lexicographic) order, so the
/// position of an edge in edges() is its EdgeId.
class Graph {
 public:
  Graph() = default;

  // Throws validation_error on loops, out-of-range endpoints, or n < 0.
  // Duplicate edges (in either orientation) collapse silently.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Canonical edge list, sorted by (min endpoint, max endpoint).
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int a, int b) const;
  int degree(int v) const;

  // Index of {a,b} in the canonical order, or -1 if absent.
  int edge_index(int a, int b) const;

  bool connected() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> adj_;  // n*n matrix, row-major, 0-based

  void check_vertex(int v) const;
};

/// Parses the edge-list format: header "n m", then m lines "a b".
/// Lines starting with '#' are ignored. Duplicate or reversed-duplicate edge
/// lines collapse to one edge and append a message to *warnings if given.
Graph parse_edge_list(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_edge_list(const std::string& text, std::vector<std::string>* warnings = nullptr);

// Inverse of parse_edge_list: header line plus canonical edge lines.
std::string serialize_edge_list(const Graph& g);

Graph complement(const Graph& g);

/// Seeded G(n, p) generator. Deterministic for fixed (n, edge_prob, seed).
/// With require_connected, rejection-samples up to a fixed retry bound and
/// throws generation_error if no connected sample is found.
Graph random_graph(int n, double edge_prob, std::uint64_t seed,
                   bool require_connected = true);

// FNV-1a over (n, m, canonical edges); stable across runs.
std::uint64_t graph_fingerprint(const Graph& g);

}  // namespace tg
