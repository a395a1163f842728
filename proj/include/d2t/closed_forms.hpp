#pragma once

#include <optional>

#include "d2t/graph.hpp"

namespace d2t {

// d2 value of the n-vertex path; n >= 1
int path_d2(int n);

// d2 value of the n-vertex cycle; n >= 3
int cycle_d2(int n);

// n when diam(g) <= 2 (every vertex can sit in its own part), nullopt
// otherwise, including disconnected graphs
std::optional<int> full_value_if_small_diameter(const Graph& g);

// the five connected graphs with d2 value at most three
enum class SmallClass { k1, k2, p3, k3, p4, other };

// Which of the five small shapes a connected graph is, if any. The
// quintet is pinned down by (n, m, degree multiset) alone, so no general
// isomorphism test is needed.
SmallClass small_class_of(const Graph& g);

// d2 value when the connected graph g is one of the five small shapes
// (1 for K1, 2 for K2, 3 for P3/K3/P4); nullopt otherwise
std::optional<int> classify_small(const Graph& g);

struct CompleteBipartiteValues {
  int d2 = 0;
  // closed-form transitivity is only known for the balanced case; the
  // exact solver answers the rest
  std::optional<int> transitivity;
};

CompleteBipartiteValues complete_bipartite_d2(int t1, int t2);

}  // namespace d2t
