#pragma once

#include "polychrome/oracle.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace polychrome {

/// 2k-1 points on the parabola y = x^2, each cut off from the others by a
/// shifted tangent half-plane, plus n-(2k-1) bulk points placed in the common
/// complement of all those half-planes.
struct LowerBoundInstance {
  PointSet points;
  std::vector<int> curve_indices;  // 0 .. 2k-2
  int k = 1;
  std::vector<HalfPlane> separators;  // separators[i] cuts exactly curve \ {i}
};

/// No k-coloring of such an instance can make every (2k-2)-point cut
/// polychromatic, so the best threshold is exactly 2k-1.
inline LowerBoundInstance gen_lower_bound(int n, int k) {
  if (k < 1 || n < 2 * k - 1)
    throw std::invalid_argument("gen_lower_bound: need n >= 2k-1 >= 1");
  LowerBoundInstance inst;
  inst.k = k;
  std::vector<Point> pts;
  for (int i = 1; i <= 2 * k - 1; ++i) {
    Rat x(i - k);
    pts.push_back({x, x * x});
    inst.curve_indices.push_back(i - 1);
    // tangent y = 2 x_i x - x_i^2 raised by 1/2: keeps every other curve
    // point (vertical gap (x - x_i)^2 >= 1) and drops p_i
    inst.separators.emplace_back(Rat(-2) * x, Rat(1), -x * x + Rat(1, 2));
  }
  // bulk points on a far-down concave arc: depth -M - j^2 defeats every
  // separator and every collinearity with curve points for M this large
  Int M = Int(2 * n + 2 * k + 2) * (2 * n + 2 * k + 2);
  for (int j = 0; j + 2 * k <= n; ++j) pts.push_back({Rat(j), Rat(-M) - Rat(j) * Rat(j)});
  inst.points = PointSet(std::move(pts));

  if (!in_general_position(inst.points))
    throw std::logic_error("gen_lower_bound: instance not in general position");
  for (int i = 0; i < 2 * k - 1; ++i)
    for (int p = 0; p < n; ++p) {
      bool want = p < 2 * k - 1 && p != i;
      if (inst.separators[i].contains(inst.points[p]) != want)
        throw std::logic_error("gen_lower_bound: separator cut mismatch");
    }
  return inst;
}

struct CertifyResult {
  bool ok = true;
  std::optional<Coloring> counterexample;  // a coloring defeating the bound
};

/// Checks exhaustively that every k-coloring leaves some (2k-2)-point cut
/// non-polychromatic. Only curve colorings need enumeration: the bulk points
/// lie outside every separator half-plane, and some color appears at most
/// once among the 2k-1 curve points, so that point's separator cut misses it.
inline CertifyResult certify_lower_bound(const LowerBoundInstance& inst) {
  const int k = inst.k;
  const int c = 2 * k - 1;
  if (static_cast<int>(inst.curve_indices.size()) != c ||
      static_cast<int>(inst.separators.size()) != c)
    throw std::invalid_argument("certify_lower_bound: malformed instance");
  if (k == 1) return {true, std::nullopt};  // the empty cut already fails
  std::vector<int> chi(c, 1);
  while (true) {
    bool defeated = false;
    for (int i = 0; i < c && !defeated; ++i) {
      // the cut curve \ {i}: does it miss some color?
      std::vector<char> seen(static_cast<std::size_t>(k) + 1, 0);
      for (int p = 0; p < c; ++p)
        if (p != i) seen[chi[p]] = 1;
      for (int col = 1; col <= k; ++col)
        if (!seen[col]) {
          defeated = true;
          break;
        }
    }
    if (!defeated) {
      Coloring bad{k, {}};
      bad.colors.assign(inst.points.size(), 1);
      for (int p = 0; p < c; ++p) bad.colors[inst.curve_indices[p]] = chi[p];
      return {false, bad};
    }
    int pos = c - 1;
    while (pos >= 0 && chi[pos] == k) chi[pos--] = 1;
    if (pos < 0) break;
    ++chi[pos];
  }
  return {true, std::nullopt};
}

}  // namespace polychrome
