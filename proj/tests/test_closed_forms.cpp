#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "d2t/closed_forms.hpp"
#include "d2t/solver.hpp"
#include "oracle.hpp"

using namespace d2t;
using namespace d2t::test;

TEST_SUITE_BEGIN("closed_forms");

TEST_CASE("path table") {
  CHECK(path_d2(4) == 3);
  CHECK(path_d2(6) == 4);
  CHECK(path_d2(100) == 5);
  CHECK_THROWS_AS(path_d2(0), std::invalid_argument);
}

TEST_CASE("cycle table") {
  CHECK(cycle_d2(3) == 3);
  CHECK(cycle_d2(4) == 4);
  CHECK(cycle_d2(5) == 5);
  CHECK(cycle_d2(6) == 4);  // the one dip: the hexagon's square is the octahedron
  CHECK(cycle_d2(7) == 5);
  CHECK(cycle_d2(11) == 5);
  CHECK_THROWS_AS(cycle_d2(2), std::invalid_argument);
}

TEST_CASE("path formula matches the exact solver") {
  for (int n = 1; n <= 12; ++n)
    CHECK(path_d2(n) == exact_d2_transitivity(path_graph(n)).value);
}

TEST_CASE("cycle formula matches the exact solver") {
  for (int n = 3; n <= 12; ++n)
    CHECK(cycle_d2(n) == exact_d2_transitivity(cycle_graph(n)).value);
}

TEST_CASE("full value on diameter-two graphs") {
  CHECK(full_value_if_small_diameter(petersen_graph()) == 10);
  CHECK(full_value_if_small_diameter(complete_bipartite_graph(3, 3)) == 6);
  CHECK_FALSE(full_value_if_small_diameter(path_graph(5)).has_value());
  CHECK_FALSE(
      full_value_if_small_diameter(build_graph(4, {{0, 1}, {2, 3}})).has_value());
}

TEST_CASE("full value characterization, exhaustive up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [n](const Graph& g) {
      if (!is_connected(g)) return;
      bool full = exact_d2_transitivity(g).value == n;
      CHECK(full == full_value_if_small_diameter(g).has_value());
    });
  }
}

TEST_CASE("classify_small") {
  CHECK(classify_small(build_graph(1, {})) == 1);
  CHECK(classify_small(complete_graph(2)) == 2);
  CHECK(classify_small(path_graph(3)) == 3);
  CHECK(classify_small(complete_graph(3)) == 3);
  CHECK(classify_small(path_graph(4)) == 3);
  CHECK_FALSE(classify_small(cycle_graph(4)).has_value());
  CHECK_FALSE(classify_small(complete_bipartite_graph(1, 3)).has_value());
  CHECK_THROWS_AS(classify_small(build_graph(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);

  CHECK(small_class_of(path_graph(3)) == SmallClass::p3);
  CHECK(small_class_of(complete_graph(3)) == SmallClass::k3);
  CHECK(small_class_of(path_graph(4)) == SmallClass::p4);
  CHECK(small_class_of(complete_bipartite_graph(1, 3)) == SmallClass::other);
}

TEST_CASE("classify_small matches the solver on all small connected graphs") {
  for (int n = 1; n <= 5; ++n) {
    for_each_labeled_graph(n, [](const Graph& g) {
      if (!is_connected(g)) return;
      auto tag = classify_small(g);
      const int value = exact_d2_transitivity(g).value;
      if (tag)
        CHECK(*tag == value);
      else
        CHECK(value >= 4);
    });
  }
}

TEST_CASE("complete bipartite values") {
  auto kb33 = complete_bipartite_d2(3, 3);
  CHECK(kb33.d2 == 6);
  CHECK(kb33.transitivity == 4);

  auto kb11 = complete_bipartite_d2(1, 1);
  CHECK(kb11.d2 == 2);
  CHECK(kb11.transitivity == 2);

  auto kb25 = complete_bipartite_d2(2, 5);
  CHECK(kb25.d2 == 7);
  CHECK_FALSE(kb25.transitivity.has_value());

  CHECK_THROWS_AS(complete_bipartite_d2(0, 3), std::invalid_argument);
}

TEST_CASE("complete bipartite formulas match the solver") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = a; b <= 4; ++b) {
      Graph g = complete_bipartite_graph(a, b);
      auto vals = complete_bipartite_d2(a, b);
      CHECK(vals.d2 == exact_d2_transitivity(g).value);
      if (vals.transitivity)
        CHECK(*vals.transitivity == exact_transitivity(g).value);
    }
  }
}

TEST_SUITE_END();
