#include "d2t/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace d2t {

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<size_t>(u)])
      if (v > u) out.emplace_back(u, v);
  return out;
}

Graph build_graph(int n, std::span<const Edge> edge_list) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<size_t>(n), VertexSet(n));
  g.deg_.assign(static_cast<size_t>(n), 0);
  for (const auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") out of range for n=" +
                                  std::to_string(n));
    if (u == v)
      throw std::invalid_argument("self-loop (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") not allowed");
    if (g.adj_[static_cast<size_t>(u)].test(v)) continue;
    g.adj_[static_cast<size_t>(u)].set(v);
    g.adj_[static_cast<size_t>(v)].set(u);
    ++g.deg_[static_cast<size_t>(u)];
    ++g.deg_[static_cast<size_t>(v)];
    ++g.m_;
  }
  return g;
}

Graph build_graph(int n, std::initializer_list<Edge> edge_list) {
  return build_graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size()));
}

DistanceRow distances_from(const Graph& g, int source) {
  const int n = g.vertex_count();
  if (source < 0 || source >= n)
    throw std::invalid_argument("source vertex out of range");
  DistanceRow row;
  row.source = source;
  row.dist.assign(static_cast<size_t>(n), kUnreachable);
  row.dist[static_cast<size_t>(source)] = 0;
  std::vector<int> frontier{source};
  int d = 0;
  while (!frontier.empty()) {
    ++d;
    std::vector<int> next;
    for (int u : frontier)
      for (int v : g.neighbors(u))
        if (row.dist[static_cast<size_t>(v)] == kUnreachable) {
          row.dist[static_cast<size_t>(v)] = d;
          next.push_back(v);
        }
    frontier = std::move(next);
  }
  return row;
}

Graph square(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) {
    VertexSet reach = g.neighbors(v);
    for (int u : g.neighbors(v)) reach |= g.neighbors(u);
    reach.reset(v);
    for (int u : reach)
      if (u > v) es.emplace_back(v, u);
  }
  return build_graph(n, es);
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) es.emplace_back(u, v);
  return build_graph(n, es);
}

std::optional<int> diameter(const Graph& g) {
  int diam = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    DistanceRow row = distances_from(g, s);
    for (int d : row.dist) {
      if (d == kUnreachable) return std::nullopt;
      diam = std::max(diam, d);
    }
  }
  return diam;
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.vertex_count();
  VertexSet seen(n);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen.test(s)) continue;
    std::vector<int> comp{s};
    seen.set(s);
    for (size_t i = 0; i < comp.size(); ++i)
      for (int v : g.neighbors(comp[i]))
        if (!seen.test(v)) {
          seen.set(v);
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep) {
  std::vector<int> ids(keep.begin(), keep.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int v : ids)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex " +
                                  std::to_string(v) + " out of range");
  if (ids.empty())
    throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<int> to_new(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < ids.size(); ++i) to_new[static_cast<size_t>(ids[i])] = static_cast<int>(i);
  std::vector<Edge> es;
  for (size_t i = 0; i < ids.size(); ++i)
    for (int v : g.neighbors(ids[i])) {
      int nv = to_new[static_cast<size_t>(v)];
      if (nv > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), nv);
    }
  return {build_graph(static_cast<int>(ids.size()), es), std::move(ids)};
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
  return best;
}

}  // namespace d2t
