#include "d2t/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace d2t {

int path_d2(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  if (n == 1) return 1;
  if (n == 2) return 2;
  if (n <= 4) return 3;
  if (n <= 6) return 4;
  return 5;
}

int cycle_d2(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  if (n == 3) return 3;
  if (n == 4) return 4;
  // the degree ceiling of 5 is not reached by the hexagon: its square is
  // the octahedron, where four singleton parts would need a 4-clique
  if (n == 6) return 4;
  return 5;
}

std::optional<int> full_value_if_small_diameter(const Graph& g) {
  auto diam = diameter(g);
  if (diam && *diam <= 2) return g.vertex_count();
  return std::nullopt;
}

SmallClass small_class_of(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("small_class_of needs a connected graph");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (n == 1) return SmallClass::k1;
  if (n == 2) return SmallClass::k2;
  if (n == 3 && m == 2) return SmallClass::p3;
  if (n == 3 && m == 3) return SmallClass::k3;
  if (n == 4 && m == 3) {
    // P4 vs the star: the only connected (4,3) graphs
    std::vector<int> degs;
    for (int v = 0; v < n; ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    if (degs == std::vector<int>{1, 1, 2, 2}) return SmallClass::p4;
  }
  return SmallClass::other;
}

std::optional<int> classify_small(const Graph& g) {
  switch (small_class_of(g)) {
    case SmallClass::k1: return 1;
    case SmallClass::k2: return 2;
    case SmallClass::p3:
    case SmallClass::k3:
    case SmallClass::p4: return 3;
    case SmallClass::other: return std::nullopt;
  }
  return std::nullopt;
}

CompleteBipartiteValues complete_bipartite_d2(int t1, int t2) {
  if (t1 < 1 || t2 < 1)
    throw std::invalid_argument("complete bipartite sides must be non-empty");
  CompleteBipartiteValues out;
  out.d2 = t1 + t2;  // diameter is at most 2
  if (t1 == t2) out.transitivity = t1 + 1;
  return out;
}

}  // namespace d2t
