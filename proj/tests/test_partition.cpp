#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "d2t/partition.hpp"
#include "oracle.hpp"

using namespace d2t;
using namespace d2t::test;

namespace {

// every ordered set partition of {0..n-1}, as part lists
void for_each_ordered_partition(
    int n, const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  for (int k = 1; k <= n; ++k) {
    long long total = 1;
    for (int i = 0; i < n; ++i) total *= k;
    for (long long code = 0; code < total; ++code) {
      std::vector<std::vector<int>> parts(static_cast<size_t>(k));
      long long c = code;
      for (int v = 0; v < n; ++v) {
        parts[static_cast<size_t>(c % k)].push_back(v);
        c /= k;
      }
      bool surjective = true;
      for (const auto& part : parts)
        if (part.empty()) surjective = false;
      if (surjective) fn(parts);
    }
  }
}

}  // namespace

TEST_SUITE_BEGIN("partition");

TEST_CASE("dominates on small graphs") {
  Graph p3 = path_graph(3);
  CHECK(dominates(p3, VertexSet::of(3, {1}), VertexSet::of(3, {0, 2})));
  CHECK_FALSE(dominates(p3, VertexSet::of(3, {0}), VertexSet::of(3, {2})));

  Graph k4 = complete_graph(4);
  CHECK(dominates(k4, VertexSet::of(4, {0}), VertexSet::of(4, {1, 2, 3})));
  CHECK(dominates(k4, VertexSet::of(4, {1, 3}), VertexSet::of(4, {0})));
}

TEST_CASE("dominates rejects empty or overlapping sets") {
  Graph p3 = path_graph(3);
  CHECK_THROWS_AS(dominates(p3, VertexSet(3), VertexSet::of(3, {0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(dominates(p3, VertexSet::of(3, {0}), VertexSet(3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      dominates(p3, VertexSet::of(3, {0, 1}), VertexSet::of(3, {1, 2})),
      std::invalid_argument);
}

TEST_CASE("d2_dominates uses distances in the whole graph") {
  Graph p3 = path_graph(3);
  CHECK(d2_dominates(p3, VertexSet::of(3, {0}), VertexSet::of(3, {2})));

  Graph p4 = path_graph(4);
  CHECK_FALSE(d2_dominates(p4, VertexSet::of(4, {0}), VertexSet::of(4, {3})));
  CHECK(d2_dominates(p4, VertexSet::of(4, {0, 3}), VertexSet::of(4, {1, 2})));
}

TEST_CASE("is_transitive on hand examples") {
  Graph p3 = path_graph(3);
  CHECK(is_transitive(p3, make_partition(3, {{0, 1, 2}})));
  CHECK(is_transitive(p3, make_partition(3, {{0, 2}, {1}})));
  CHECK_FALSE(is_transitive(p3, make_partition(3, {{0}, {1}, {2}})));
}

TEST_CASE("is_d2_transitive on hand examples") {
  Graph p3 = path_graph(3);
  CHECK(is_d2_transitive(p3, make_partition(3, {{0}, {1}, {2}})));

  Graph p5 = path_graph(5);
  CHECK_FALSE(is_d2_transitive(p5, make_partition(5, {{0}, {4}, {1, 2, 3}})));
  CHECK(is_d2_transitive(p5, make_partition(5, {{0, 1, 2, 3, 4}})));
}

TEST_CASE("validation rejects malformed partitions") {
  Graph p3 = path_graph(3);
  CHECK_THROWS_AS(is_transitive(p3, make_partition(3, {{0, 1}})),
                  std::invalid_argument);  // does not cover
  CHECK_THROWS_AS(is_transitive(p3, make_partition(3, {{0, 1, 2}, {}})),
                  std::invalid_argument);  // empty part
  CHECK_THROWS_AS(is_transitive(p3, make_partition(3, {{0, 1}, {1, 2}})),
                  std::invalid_argument);  // overlap
  CHECK_THROWS_AS(is_transitive(p3, make_partition(4, {{0, 1, 2, 3}})),
                  std::invalid_argument);  // wrong universe
}

TEST_CASE("first_violation") {
  Graph p3 = path_graph(3);
  auto v = first_violation(p3, make_partition(3, {{0}, {1}, {2}}),
                           Mode::transitive);
  REQUIRE(v.has_value());
  CHECK(v->part_a == 1);
  CHECK(v->part_b == 3);
  CHECK(v->vertex == 2);

  CHECK_FALSE(first_violation(p3, make_partition(3, {{0}, {1}, {2}}), Mode::d2)
                  .has_value());

  Graph k2 = complete_graph(2);
  CHECK_FALSE(
      first_violation(k2, make_partition(2, {{0}, {1}}), Mode::transitive)
          .has_value());
}

TEST_CASE("d2 check equals transitive check on the square") {
  for (int n = 2; n <= 5; ++n) {
    for_each_labeled_graph(n, [n](const Graph& g) {
      Graph sq = square(g);
      for_each_ordered_partition(n, [&](const std::vector<std::vector<int>>& parts) {
        OrderedPartition p = make_partition(n, parts);
        CHECK(is_d2_transitive(g, p) == is_transitive(sq, p));
      });
    });
  }
}

TEST_CASE("d2 check equals transitive-on-square on sampled 6-vertex graphs") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<Edge> es;
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v)
        if (rng() % 2 == 0) es.emplace_back(u, v);
    Graph g = build_graph(6, es);
    Graph sq = square(g);
    for_each_ordered_partition(6, [&](const std::vector<std::vector<int>>& parts) {
      OrderedPartition p = make_partition(6, parts);
      CHECK(is_d2_transitive(g, p) == is_transitive(sq, p));
    });
  }
}

TEST_CASE("every transitive partition is d2-transitive") {
  for_each_labeled_graph(4, [](const Graph& g) {
    for_each_ordered_partition(4, [&](const std::vector<std::vector<int>>& parts) {
      OrderedPartition p = make_partition(4, parts);
      if (is_transitive(g, p)) CHECK(is_d2_transitive(g, p));
    });
  });
}

TEST_CASE("merging the first two parts preserves the property") {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 200) {
    const int n = 3 + static_cast<int>(rng() % 5);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2 == 0) es.emplace_back(u, v);
    Graph g = build_graph(n, es);
    const int k = 2 + static_cast<int>(rng() % (n - 1));
    std::vector<std::vector<int>> parts(static_cast<size_t>(k));
    for (int v = 0; v < n; ++v)
      parts[static_cast<size_t>(v < k ? v : static_cast<int>(rng() % k))].push_back(v);
    OrderedPartition p = make_partition(n, parts);

    std::vector<std::vector<int>> merged_parts{parts[0]};
    merged_parts[0].insert(merged_parts[0].end(), parts[1].begin(), parts[1].end());
    for (size_t i = 2; i < parts.size(); ++i) merged_parts.push_back(parts[i]);
    OrderedPartition merged = make_partition(n, merged_parts);

    for (Mode mode : {Mode::transitive, Mode::d2}) {
      if (!first_violation(g, p, mode).has_value())
        CHECK_FALSE(first_violation(g, merged, mode).has_value());
    }
    ++checked;
  }
}

TEST_SUITE_END();
