#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "d2t/graph.hpp"
#include "oracle.hpp"

using namespace d2t;
using namespace d2t::test;

TEST_SUITE_BEGIN("graph");

TEST_CASE("vertex sets work across word boundaries") {
  VertexSet s(130);
  CHECK(s.empty());
  CHECK(s.begin() == s.end());
  for (int v : {0, 63, 64, 101, 129}) s.set(v);
  CHECK(s.count() == 5);
  CHECK(s.to_vector() == std::vector<int>{0, 63, 64, 101, 129});
  CHECK(s.first() == 0);
  s.reset(0);
  CHECK(s.first() == 63);

  VertexSet t = VertexSet::of(130, {63, 70, 129});
  CHECK(s.count_and(t) == 2);
  CHECK(s.intersects(t));
  CHECK_FALSE(t.is_subset_of(s));
  VertexSet u = t;
  u.subtract(s);
  CHECK(u.to_vector() == std::vector<int>{70});
  CHECK((s | t).count() == 5);
  CHECK(VertexSet::full(130).count() == 130);
}

TEST_CASE("build_graph basics") {
  Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 0));
  CHECK_FALSE(p3.has_edge(0, 2));

  Graph k1 = build_graph(1, {});
  CHECK(k1.vertex_count() == 1);
  CHECK(k1.edge_count() == 0);
}

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(build_graph(2, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(3, {{-1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(0, {}), std::invalid_argument);
}

TEST_CASE("build_graph collapses duplicates") {
  Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);
}

TEST_CASE("distances_from") {
  Graph p3 = path_graph(3);
  DistanceRow row = distances_from(p3, 0);
  CHECK(row.dist == std::vector<int>{0, 1, 2});

  Graph two_k2 = build_graph(4, {{0, 1}, {2, 3}});
  row = distances_from(two_k2, 0);
  CHECK(row.dist[0] == 0);
  CHECK(row.dist[1] == 1);
  CHECK(row.dist[2] == kUnreachable);
  CHECK(row.dist[3] == kUnreachable);
}

TEST_CASE("distances agree with Floyd-Warshall on random graphs") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) es.emplace_back(u, v);
    Graph g = build_graph(n, es);
    auto fw = floyd_distances(g);
    for (int s = 0; s < n; ++s) {
      DistanceRow row = distances_from(g, s);
      CHECK(row.dist == fw[static_cast<size_t>(s)]);
    }
  }
}

TEST_CASE("square of small graphs") {
  Graph p4 = path_graph(4);
  Graph sq = square(p4);
  CHECK(sq.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});

  Graph k3 = complete_graph(3);
  CHECK(square(k3) == k3);
}

TEST_CASE("square of C6 has all degrees 4") {
  // oracle: pairwise distances by Floyd-Warshall
  Graph c6 = cycle_graph(6);
  auto fw = floyd_distances(c6);
  Graph sq = square(c6);
  for (int u = 0; u < 6; ++u) {
    CHECK(sq.degree(u) == 4);
    for (int v = 0; v < 6; ++v)
      if (u != v)
        CHECK(sq.has_edge(u, v) == (fw[u][v] >= 1 && fw[u][v] <= 2));
  }
}

TEST_CASE("square supersets the original edges") {
  for_each_labeled_graph(5, [](const Graph& g) {
    Graph sq = square(g);
    for (const auto& [u, v] : g.edges()) CHECK(sq.has_edge(u, v));
  });
}

TEST_CASE("square(G) == G exactly when no pair sits at distance two") {
  for_each_labeled_graph(5, [](const Graph& g) {
    auto fw = floyd_distances(g);
    bool has_distance_two = false;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v)
        if (fw[u][v] == 2) has_distance_two = true;
    CHECK((square(g) == g) == !has_distance_two);
  });
}

TEST_CASE("complement of small graphs") {
  CHECK(complement(complete_graph(3)).edge_count() == 0);
  CHECK(complement(path_graph(3)).edges() == std::vector<Edge>{{0, 2}});
  CHECK(is_isomorphic(complement(cycle_graph(5)), cycle_graph(5)));
}

TEST_CASE("complement is an involution") {
  for_each_labeled_graph(5, [](const Graph& g) {
    CHECK(complement(complement(g)) == g);
  });
}

TEST_CASE("diameter") {
  CHECK(diameter(complete_graph(4)) == 1);
  CHECK(diameter(path_graph(5)) == 4);
  CHECK(diameter(build_graph(1, {})) == 0);
  CHECK_FALSE(diameter(build_graph(4, {{0, 1}, {2, 3}})).has_value());
}

TEST_CASE("diameter <= 2 iff the square is complete") {
  for (int n = 2; n <= 6; ++n) {
    for_each_labeled_graph(n, [n](const Graph& g) {
      auto diam = diameter(g);
      bool small = diam.has_value() && *diam <= 2;
      bool square_complete = square(g).edge_count() == n * (n - 1) / 2;
      CHECK(small == square_complete);
    });
  }
}

TEST_CASE("components") {
  CHECK(components(path_graph(4)) == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(components(build_graph(4, {{0, 1}, {2, 3}})) ==
        std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  Graph k1_k3 = build_graph(4, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(components(k1_k3) == std::vector<std::vector<int>>{{0}, {1, 2, 3}});
}

TEST_CASE("induced_subgraph") {
  Graph k4 = complete_graph(4);
  auto [g1, map1] = induced_subgraph(k4, std::vector<int>{0, 2, 3});
  CHECK(g1 == complete_graph(3));
  CHECK(map1 == std::vector<int>{0, 2, 3});

  Graph p4 = path_graph(4);
  auto all = induced_subgraph(p4, std::vector<int>{0, 1, 2, 3});
  CHECK(all.graph == p4);

  auto [g2, map2] = induced_subgraph(p4, std::vector<int>{0, 2, 3});
  CHECK(g2.edges() == std::vector<Edge>{{1, 2}});
  CHECK(map2 == std::vector<int>{0, 2, 3});

  CHECK_THROWS_AS(induced_subgraph(p4, std::vector<int>{0, 9}),
                  std::invalid_argument);
}

TEST_CASE("max_degree") {
  CHECK(max_degree(build_graph(1, {})) == 0);
  CHECK(max_degree(path_graph(5)) == 2);
  CHECK(max_degree(complete_bipartite_graph(2, 3)) == 3);
}

TEST_CASE("edge distance property: endpoints differ by at most one level") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 30; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 6);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2 == 0) es.emplace_back(u, v);
    Graph g = build_graph(n, es);
    for (int s = 0; s < n; ++s) {
      DistanceRow row = distances_from(g, s);
      for (const auto& [u, v] : g.edges()) {
        const int du = row.dist[static_cast<size_t>(u)];
        const int dv = row.dist[static_cast<size_t>(v)];
        CHECK((du == kUnreachable) == (dv == kUnreachable));
        if (du != kUnreachable) CHECK(std::abs(du - dv) <= 1);
      }
    }
  }
}

TEST_SUITE_END();
