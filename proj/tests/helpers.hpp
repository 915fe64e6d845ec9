#pragma once

#include "polychrome/polychrome.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace testutil {

using namespace polychrome;

/// Random integer-coordinate point set with no three points collinear.
/// Incremental rejection with 64-bit cross products (coordinates stay small).
inline PointSet random_gp_points(std::mt19937_64& rng, int n, int range = 1000) {
  std::uniform_int_distribution<long long> coord(-range, range);
  std::vector<long long> xs, ys;
  while (static_cast<int>(xs.size()) < n) {
    long long x = coord(rng), y = coord(rng);
    bool ok = true;
    for (std::size_t i = 0; i < xs.size() && ok; ++i) {
      if (xs[i] == x && ys[i] == y) ok = false;
      for (std::size_t j = i + 1; j < xs.size() && ok; ++j) {
        long long cr = (xs[j] - xs[i]) * (y - ys[i]) - (ys[j] - ys[i]) * (x - xs[i]);
        if (cr == 0) ok = false;
      }
    }
    if (ok) {
      xs.push_back(x);
      ys.push_back(y);
    }
  }
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    pts.push_back({Rat(static_cast<long>(xs[i])), Rat(static_cast<long>(ys[i]))});
  return PointSet(std::move(pts));
}

/// Random half-plane family with pairwise distinct boundary lines.
/// exclude_origin forces c >= 1, so the family never covers the plane.
inline std::vector<HalfPlane> random_halfplanes(std::mt19937_64& rng, int n,
                                                bool exclude_origin = false, int range = 20) {
  std::uniform_int_distribution<int> coef(-range, range);
  std::vector<HalfPlane> out;
  std::set<Line> lines;
  while (static_cast<int>(out.size()) < n) {
    int a = coef(rng), b = coef(rng), c = coef(rng);
    if (a == 0 && b == 0) continue;
    if (exclude_origin && c < 1) continue;
    HalfPlane h{Rat(a), Rat(b), Rat(c)};
    if (!lines.insert(h.boundary()).second) continue;
    out.push_back(h);
  }
  return out;
}

inline Point random_point(std::mt19937_64& rng, int range = 1000) {
  std::uniform_int_distribution<long long> coord(-range, range);
  return {Rat(static_cast<long>(coord(rng))), Rat(static_cast<long>(coord(rng)))};
}

}  // namespace testutil
