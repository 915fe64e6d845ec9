#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace polychrome;

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(gen_lower_bound(4, 3), std::invalid_argument);
  CHECK_THROWS_AS(gen_lower_bound(1, 0), std::invalid_argument);
}

TEST_CASE("pure curve instance has no bulk points") {
  auto inst = gen_lower_bound(5, 3);
  CHECK(inst.points.size() == 5);
  CHECK(inst.curve_indices.size() == 5);
  CHECK(in_general_position(inst.points));
}

TEST_CASE("separators cut exactly the other curve points") {
  auto inst = gen_lower_bound(30, 2);
  REQUIRE(inst.separators.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int p = 0; p < 30; ++p) {
      bool expect = p < 3 && p != i;
      CHECK(inst.separators[i].contains(inst.points[p]) == expect);
    }
}

TEST_CASE("tangent separation on the curve") {
  auto inst = gen_lower_bound(9, 5);
  // every curve point is strictly inside every separator except its own
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) {
      const auto& h = inst.separators[i];
      Rat slack = h.a() * inst.points[j].x + h.b() * inst.points[j].y - h.c();
      if (i == j)
        CHECK(slack < 0);
      else
        CHECK(slack > 0);
    }
}

TEST_CASE("bulk points avoid every separator") {
  auto inst = gen_lower_bound(12, 3);
  for (std::size_t p = 5; p < 12; ++p)
    for (const auto& h : inst.separators) CHECK_FALSE(h.contains(inst.points[p]));
}

TEST_CASE("instances are in general position") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{10, 3}, {17, 4}, {25, 2}})
    CHECK(in_general_position(gen_lower_bound(n, k).points));
}

TEST_CASE("certification: no coloring beats the bound") {
  CHECK(certify_lower_bound(gen_lower_bound(7, 1)).ok);
  CHECK(certify_lower_bound(gen_lower_bound(5, 2)).ok);
  CHECK(certify_lower_bound(gen_lower_bound(10, 3)).ok);
  CHECK(certify_lower_bound(gen_lower_bound(9, 4)).ok);
}

TEST_CASE("exhaustive search confirms the tight threshold") {
  auto inst = gen_lower_bound(5, 2);
  CHECK(exhaustive_best_threshold(inst.points, 2) == 3);
  auto inst2 = gen_lower_bound(7, 2);
  CHECK(exhaustive_best_threshold(inst2.points, 2) == 3);
}

TEST_CASE("the upper-bound coloring is optimal on the instance") {
  auto inst = gen_lower_bound(10, 3);
  auto pc = color_points(inst.points, 3);
  CHECK(verify_point_coloring(inst.points, pc.coloring, 5).ok);
}
