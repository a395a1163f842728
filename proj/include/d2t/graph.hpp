#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "d2t/vertex_set.hpp"

namespace d2t {

using Edge = std::pair<int, int>;

// marker used in DistanceRow for vertices with no path from the source
inline constexpr int kUnreachable = -1;

// Simple undirected graph over dense vertex ids 0..n-1. Immutable after
// construction; transforms below return new graphs, so values can be
// shared freely across concurrent readers.
class Graph {
public:
  Graph() = default;

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const { return adj_[static_cast<size_t>(u)].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return deg_[static_cast<size_t>(v)]; }

  // all edges as (u, v) with u < v, in lexicographic order
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

  friend Graph build_graph(int n, std::span<const Edge> edge_list);

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> deg_;
};

// Throws std::invalid_argument on n < 1, out-of-range ids or self-loops.
// Duplicate edges are collapsed.
Graph build_graph(int n, std::span<const Edge> edge_list);
Graph build_graph(int n, std::initializer_list<Edge> edge_list);

struct DistanceRow {
  int source = 0;
  std::vector<int> dist;  // hop counts; kUnreachable where no path exists
};

DistanceRow distances_from(const Graph& g, int source);

// same vertices; uv is an edge iff 1 <= d_G(u,v) <= 2
Graph square(const Graph& g);

Graph complement(const Graph& g);

// max finite distance over all pairs; nullopt when g is disconnected
std::optional<int> diameter(const Graph& g);

// maximal connected pieces as ascending vertex lists, ordered by their
// smallest member
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // new id -> id in the host graph
};

// keep must be a subset of V; duplicates are collapsed, order ignored
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep);

int max_degree(const Graph& g);

}  // namespace d2t
