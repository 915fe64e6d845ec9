#include "helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace polychrome;
using testutil::random_gp_points;
using testutil::random_halfplanes;

TEST_CASE("eps out of range is rejected") {
  std::mt19937_64 rng(501);
  PointSet P = random_gp_points(rng, 5);
  CHECK_THROWS_AS(epsnet_points(P, Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(epsnet_points(P, Rat(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(epsnet_points(P, Rat(-1, 4)), std::invalid_argument);
}

TEST_CASE("eps = 1 needs a single point") {
  std::mt19937_64 rng(502);
  PointSet P = random_gp_points(rng, 9);
  auto net = epsnet_points(P, Rat(1));
  CHECK(net.indices.size() <= 1);
  CHECK(net.size_bound_guaranteed);
  CHECK(verify_epsnet(P, net).ok);
}

TEST_CASE("net size stays strictly below 2/eps") {
  std::mt19937_64 rng(503);
  for (int rep = 0; rep < 6; ++rep) {
    int n = 41 + 10 * rep;  // odd, so eps*n is never an integer
    PointSet P = random_gp_points(rng, n);
    for (Rat eps : {Rat(1, 4), Rat(1, 6), Rat(1, 10)}) {
      auto net = epsnet_points(P, eps);
      INFO("n " << n << " eps " << to_string(eps));
      CHECK(Rat(static_cast<int>(net.indices.size())) * eps < 2);
      CHECK(net.size_bound_guaranteed);
      CHECK(verify_epsnet(P, net).ok);
    }
  }
}

TEST_CASE("hundred-point instance at eps 1/10 stays below twenty points") {
  std::mt19937_64 rng(504);
  PointSet P = random_gp_points(rng, 100);
  auto net = epsnet_points(P, Rat(1, 10));
  CHECK(net.indices.size() <= 19);
  CHECK(verify_epsnet(P, net).ok);
}

TEST_CASE("random sixty-point instance at eps 1/6") {
  std::mt19937_64 rng(505);
  PointSet P = random_gp_points(rng, 60);
  auto net = epsnet_points(P, Rat(1, 6));
  CHECK(verify_epsnet(P, net).ok);
  // spelled-out check: every cut of at least 10 points meets the net
  std::set<int> members(net.indices.begin(), net.indices.end());
  for (const auto& e : oracle_hyperedges(P)) {
    if (e.size() < 10) continue;
    bool hit = false;
    for (int v : e)
      if (members.count(v)) hit = true;
    CHECK(hit);
  }
}

TEST_CASE("covering families give nets of at most three half-planes") {
  std::vector<HalfPlane> H = {{Rat(1), Rat(0), Rat(-1)}, {Rat(-1), Rat(1), Rat(-1)},
                              {Rat(-1), Rat(-1), Rat(-1)}, {Rat(0), Rat(1), Rat(3)},
                              {Rat(1), Rat(2), Rat(5)}};
  for (Rat eps : {Rat(2, 3), Rat(1, 2), Rat(1)}) {
    auto net = epsnet_halfplanes(H, eps);
    CHECK(net.indices.size() <= 3);
    CHECK(verify_epsnet(H, net).ok);
    if (eps <= Rat(2, 3)) CHECK(Rat(static_cast<int>(net.indices.size())) <= 2 / eps);
  }
}

TEST_CASE("non-covering families go through the dual coloring") {
  std::mt19937_64 rng(506);
  for (int rep = 0; rep < 6; ++rep) {
    int n = 15 + 2 * rep;  // odd
    auto H = random_halfplanes(rng, n, /*exclude_origin=*/true);
    Rat eps(1, 4);
    auto net = epsnet_halfplanes(H, eps);
    INFO("n " << n);
    CHECK(Rat(static_cast<int>(net.indices.size())) * eps < 2);
    CHECK(net.size_bound_guaranteed);
    CHECK(verify_epsnet(H, net).ok);
  }
}

TEST_CASE("generic recipe with pair constant reduces to the point net") {
  std::mt19937_64 rng(507);
  PointSet P = random_gp_points(rng, 41);
  auto space = enumerate_hyperedges(P);
  auto colorer = [](const PointSet& Q, int k) { return color_points(Q, k).coloring; };
  Rat eps(1, 5);
  auto net2 = epsnet_generic(space, 2, colorer, eps);
  CHECK(Rat(static_cast<int>(net2.indices.size())) * eps < 2);
  EpsNet as_net{net2.indices, eps, true};
  CHECK(verify_epsnet(P, as_net).ok);
}

TEST_CASE("generic recipe at higher cover constants") {
  std::mt19937_64 rng(508);
  PointSet P = random_gp_points(rng, 37);
  auto space = enumerate_hyperedges(P);
  // a colorer valid at threshold 2k-1 is a fortiori valid at 3k-2
  auto colorer = [](const PointSet& Q, int k) { return color_points(Q, k).coloring; };
  Rat eps(1, 4);
  auto net3 = epsnet_generic(space, 3, colorer, eps);
  CHECK(Rat(static_cast<int>(net3.indices.size())) * eps < 3);
  EpsNet as_net{net3.indices, eps, true};
  CHECK(verify_epsnet(P, as_net).ok);
}

TEST_CASE("pigeonhole: the chosen class is never larger than n/k") {
  std::mt19937_64 rng(509);
  for (int rep = 0; rep < 5; ++rep) {
    int n = 31 + 6 * rep;
    PointSet P = random_gp_points(rng, n);
    Rat eps(1, 4);
    const int m = static_cast<int>(ceil_int(eps * n));
    const int k = (m + 1) / 2;
    auto net = epsnet_points(P, eps);
    CHECK(static_cast<int>(net.indices.size()) <= n / k);
  }
}
