#pragma once

#include "polychrome/ranges.hpp"

#include <stdexcept>
#include <vector>

namespace polychrome {

/// Total assignment of color labels 1..k, one per ground-set index.
struct Coloring {
  int k = 1;
  std::vector<int> colors;
};

struct HittingSet {
  std::vector<int> indices;  // subset of hull vertex indices, sorted
  int t = 0;                 // the edge size it hits
};

struct ColoringLevel {
  int color = 0;
  int t = 0;
  std::vector<int> hitting_set;
};

struct PointColoring {
  Coloring coloring;
  std::vector<ColoringLevel> levels;  // colors k down to 2
  bool has_empty_class = false;
};

/// Smallest edge size at which a polychromatic k-coloring is guaranteed.
inline int threshold_for(int k) {
  if (k < 1) throw std::invalid_argument("threshold_for: k must be >= 1");
  return 2 * k - 1;
}

namespace detail {

// Hull vertices of the active subset, counter-clockwise, as global indices.
inline std::vector<int> hull_of_mask(const PointSet& P, const PairSides::Bits& mask) {
  std::vector<int> global;
  std::vector<Point> pts;
  for (auto p = mask.find_first(); p != PairSides::Bits::npos; p = mask.find_next(p)) {
    global.push_back(static_cast<int>(p));
    pts.push_back(P[static_cast<int>(p)]);
  }
  std::vector<int> out;
  for (int v : convex_hull(PointSet(std::move(pts)))) out.push_back(global[v]);
  return out;
}

// Containment-minimal hitting set for the given edges, grown down from all
// hull vertices of the active subset: scan candidates in hull order, restart
// after every successful removal. Asserts the two-point intersection bound.
inline PairSides::Bits minimal_hitting_bits(const PairSides& ps, const PairSides::Bits& mask,
                                            const std::vector<PairSides::Bits>& edges) {
  using Bits = PairSides::Bits;
  if (edges.empty()) return Bits(ps.n());
  std::vector<int> hull = hull_of_mask(ps.ground(), mask);
  Bits N(ps.n());
  for (int v : hull) N.set(v);
  std::vector<std::size_t> cnt(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    cnt[e] = (edges[e] & N).count();
    if (cnt[e] == 0) throw std::logic_error("hull vertices fail to hit a cut");
  }
  bool removed = true;
  while (removed) {
    removed = false;
    for (int v : hull) {
      if (!N.test(v)) continue;
      bool critical = false;
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (cnt[e] == 1 && edges[e].test(v)) {
          critical = true;
          break;
        }
      if (critical) continue;
      N.reset(v);
      for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e].test(v)) --cnt[e];
      removed = true;
      break;
    }
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (cnt[e] < 1 || cnt[e] > 2)
      throw std::logic_error("minimal hitting set misses the 1..2 intersection bound");
  return N;
}

}  // namespace detail

/// Containment-minimal set of hull vertices hitting every cut of exactly t
/// points. Every such cut meets the result in one or two points.
inline HittingSet minimal_hitting_set(const PointSet& P, int t) {
  if (t < 3) throw std::invalid_argument("minimal_hitting_set: t must be >= 3");
  PairSides ps{P};
  auto mask = ps.full_mask();
  auto edges = ps.cut_bits_of_size(mask, static_cast<std::size_t>(t));
  auto bits = detail::minimal_hitting_bits(ps, mask, edges);
  HittingSet hs{{}, t};
  for (auto p = bits.find_first(); p != PairSides::Bits::npos; p = bits.find_next(p))
    hs.indices.push_back(static_cast<int>(p));
  return hs;
}

/// Polychromatic k-coloring: every cut of at least 2k-1 points receives all k
/// colors. Level by level, a minimal hitting set for the (2l-1)-cuts of the
/// residual set takes color l; everything left at the end takes color 1.
inline PointColoring color_points(const PairSides& ps, int k) {
  if (k < 1) throw std::invalid_argument("color_points: k must be >= 1");
  const int n = ps.n();
  PointColoring out;
  out.coloring.k = k;
  out.coloring.colors.assign(n, 1);
  auto mask = ps.full_mask();
  for (int level = k; level >= 2; --level) {
    const int t = 2 * level - 1;
    auto edges = ps.cut_bits_of_size(mask, static_cast<std::size_t>(t));
    auto bits = detail::minimal_hitting_bits(ps, mask, edges);
    ColoringLevel lv{level, t, {}};
    for (auto p = bits.find_first(); p != PairSides::Bits::npos; p = bits.find_next(p)) {
      out.coloring.colors[p] = level;
      lv.hitting_set.push_back(static_cast<int>(p));
    }
    if (lv.hitting_set.empty()) out.has_empty_class = true;
    mask &= ~bits;
    out.levels.push_back(std::move(lv));
  }
  return out;
}

inline PointColoring color_points(const PointSet& P, int k) {
  return color_points(PairSides{P}, k);
}

}  // namespace polychrome
