#pragma once

#include "polychrome/geom.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace polychrome {

/// One realizable subset P cap h, certified by a witness half-plane whose cut
/// is exactly this index set.
struct Hyperedge {
  std::vector<int> indices;  // sorted
  HalfPlane witness;
};

struct RangeSpace {
  PointSet ground;
  std::vector<Hyperedge> edges;
};

/// Number of half-planes in H containing p.
inline std::size_t depth(const std::vector<HalfPlane>& H, const Point& p) {
  std::size_t d = 0;
  for (const auto& h : H)
    if (h.contains(p)) ++d;
  return d;
}

/// The complete half-plane hypergraph of a general-position point set,
/// including the empty and full edges. Directional sweep over all
/// pair-perpendicular directions plus arc representatives.
inline RangeSpace enumerate_hyperedges(const PointSet& P) {
  if (P.empty()) throw std::invalid_argument("enumerate_hyperedges: empty point set");
  if (!in_general_position(P))
    throw std::invalid_argument("enumerate_hyperedges: points not in general position");
  RangeSpace rs{P, {}};
  for (auto& [ids, h] : detail::sweep_cuts(P.points())) rs.edges.push_back({ids, h});
  return rs;
}

/// Cache of "strictly left of the line through p_i, p_j" bitsets for a fixed
/// general-position ground set. Supports enumerating all cuts of a prescribed
/// size restricted to an active subset, which is what the coloring recursion
/// consumes level by level without re-scanning geometry.
class PairSides {
 public:
  using Bits = boost::dynamic_bitset<>;

  explicit PairSides(PointSet P) : P_(std::move(P)), n_(static_cast<int>(P_.size())) {
    // Orientation signs survive independent positive scaling of each axis, so
    // clear denominators once and run the O(n^3) pass over plain integers.
    // The pass doubles as the general-position check.
    Int lx = 1, ly = 1;
    for (int i = 0; i < n_; ++i) {
      lx = lcm(lx, denominator(P_[i].x));
      ly = lcm(ly, denominator(P_[i].y));
    }
    std::vector<Int> ix(n_), iy(n_);
    for (int i = 0; i < n_; ++i) {
      ix[i] = numerator(P_[i].x) * (lx / denominator(P_[i].x));
      iy[i] = numerator(P_[i].y) * (ly / denominator(P_[i].y));
    }
    left_.reserve(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (j <= i) {
          left_.emplace_back();
          continue;
        }
        Bits b(n_);
        Int dx = ix[j] - ix[i], dy = iy[j] - iy[i];
        for (int p = 0; p < n_; ++p) {
          if (p == i || p == j) continue;
          Int cr = dx * (iy[p] - iy[i]) - dy * (ix[p] - ix[i]);
          int s = cr.sign();
          if (s == 0) throw std::invalid_argument("PairSides: points not in general position");
          if (s > 0) b.set(p);
        }
        left_.emplace_back(std::move(b));
      }
  }

  const PointSet& ground() const { return P_; }
  int n() const { return n_; }

  /// Points strictly left of the directed line p_i -> p_j.
  const Bits& left_of(int i, int j) const { return left_[static_cast<std::size_t>(i) * n_ + j]; }

  Bits full_mask() const {
    Bits b(n_);
    b.set();
    return b;
  }

  /// Index sets (as bitsets over the full ground set) of all cuts of exactly
  /// t active points, restricted to `active`. No witnesses; used internally.
  std::vector<Bits> cut_bits_of_size(const Bits& active, std::size_t t) const {
    std::vector<Bits> out;
    for_each_cut(active, t, t, [&](const Bits& b, int, int, int) { out.push_back(b); });
    return out;
  }

  /// Index sets of all cuts of at least `tmin` active points.
  std::vector<Bits> cut_bits_of_min_size(const Bits& active, std::size_t tmin) const {
    std::vector<Bits> out;
    for_each_cut(active, tmin, active.count(),
                 [&](const Bits& b, int, int, int) { out.push_back(b); });
    return out;
  }

  /// As above but with certified witness half-planes (cut within `active`
  /// equals the edge exactly).
  std::vector<Hyperedge> cuts_of_size(const Bits& active, std::size_t t) const {
    std::vector<Hyperedge> out;
    for_each_cut(active, t, t, [&](const Bits& b, int i, int j, int variant) {
      std::vector<int> ids;
      for (auto p = b.find_first(); p != Bits::npos; p = b.find_next(p))
        ids.push_back(static_cast<int>(p));
      HalfPlane w = witness_for(active, b, i, j, variant);
      for (int p = 0; p < n_; ++p)
        if (active.test(p) && w.contains(P_[p]) != b.test(p))
          throw std::logic_error("PairSides: witness construction failed");
      out.push_back({std::move(ids), std::move(w)});
    });
    return out;
  }

 private:
  // variant encoding: 0 = side only, 1 = side+i, 2 = side+j, 3 = side+i+j;
  // sides are +/- the left perpendicular of p_i -> p_j, so (i, j) ordered
  // pairs cover both sides.
  template <typename F>
  void for_each_cut(const Bits& active, std::size_t tmin, std::size_t tmax, F&& emit) const {
    const std::size_t cnt = active.count();
    if (tmin > cnt) return;
    if (tmax > cnt) tmax = cnt;
    std::map<Bits, int> seen;  // bitset -> dummy, dedupe across pairs
    auto offer = [&](Bits b, int i, int j, int variant) {
      if (seen.emplace(b, 0).second) emit(b, i, j, variant);
    };
    if (tmin == 0) offer(Bits(n_), -1, -1, -1);
    if (tmax == cnt && cnt > 0) offer(active, -1, -2, -1);
    if (cnt < 2) return;
    auto wanted = [&](std::size_t s) { return s >= tmin && s <= tmax; };
    for (int i = 0; i < n_; ++i) {
      if (!active.test(i)) continue;
      for (int j = 0; j < n_; ++j) {
        if (j == i || !active.test(j)) continue;
        Bits side = (i < j) ? left_of(i, j) : Bits(left_of(j, i));
        if (i > j) {
          // right side of (j, i): active minus left minus the pair itself
          side.flip();
          side.reset(i);
          side.reset(j);
        }
        side &= active;
        const std::size_t s = side.count();
        if (wanted(s)) offer(side, i, j, 0);
        if (wanted(s + 1)) {
          Bits b = side;
          b.set(i);
          offer(std::move(b), i, j, 1);
          b = side;
          b.set(j);
          offer(std::move(b), i, j, 2);
        }
        if (wanted(s + 2)) {
          Bits b = side;
          b.set(i);
          b.set(j);
          offer(std::move(b), i, j, 3);
        }
      }
    }
  }

  HalfPlane witness_for(const Bits& active, const Bits& edge, int i, int j, int variant) const {
    if (i < 0) {
      // empty or full cut: extreme threshold along direction (1, 0)
      bool want_full = (j == -2);
      bool first = true;
      Rat ext(0);
      for (auto p = active.find_first(); p != Bits::npos; p = active.find_next(p)) {
        const Rat& v = P_[static_cast<int>(p)].x;
        if (first || (want_full ? v < ext : v > ext)) ext = v;
        first = false;
      }
      return HalfPlane(Rat(1), Rat(0), want_full ? ext : ext + 1);
    }
    const Point& pi = P_[i];
    const Point& pj = P_[j];
    Rat dx = pj.x - pi.x, dy = pj.y - pi.y;
    // normal pointing toward the chosen side (left for i<j ordering used
    // above when i<j; right side was taken via the swapped pair, and the
    // left-perpendicular of p_i -> p_j still points at it after the swap
    // because the roles of i and j are swapped consistently)
    Rat nx = -dy, ny = dx;
    Rat base = nx * pi.x + ny * pi.y;
    switch (variant) {
      case 3:
        return HalfPlane(nx, ny, base);
      case 0: {
        // threshold strictly between the line and the nearest side point
        bool first = true;
        Rat lo(0);
        for (auto p = edge.find_first(); p != Bits::npos; p = edge.find_next(p)) {
          Rat v = nx * P_[static_cast<int>(p)].x + ny * P_[static_cast<int>(p)].y;
          if (first || v < lo) lo = v;
          first = false;
        }
        return HalfPlane(nx, ny, first ? Rat(base + 1) : Rat((base + lo) / 2));
      }
      default: {
        // tilt the boundary around the kept endpoint to drop the other one
        bool keep_i = (variant == 1);
        const Point& anchor = keep_i ? pi : pj;
        Rat sign = keep_i ? Rat(-1) : Rat(1);
        Rat tmax(1);
        for (auto p = active.find_first(); p != Bits::npos; p = active.find_next(p)) {
          int q = static_cast<int>(p);
          if (q == i || q == j) continue;
          Rat A = nx * (P_[q].x - anchor.x) + ny * (P_[q].y - anchor.y);
          Rat B = dx * (P_[q].x - anchor.x) + dy * (P_[q].y - anchor.y);
          if (B == 0) continue;
          Rat ratio = abs(A) / abs(B);
          if (ratio < tmax) tmax = ratio;
        }
        Rat t = tmax / 2;
        Rat tx = nx + sign * t * dx, ty = ny + sign * t * dy;
        return HalfPlane(tx, ty, tx * anchor.x + ty * anchor.y);
      }
    }
  }

  PointSet P_;
  int n_;
  std::vector<Bits> left_;
};

/// All cuts of exactly t points, each with a certified witness.
inline std::vector<Hyperedge> hyperedges_of_size(const PointSet& P, std::size_t t) {
  PairSides ps(P);
  return ps.cuts_of_size(ps.full_mask(), t);
}

}  // namespace polychrome
