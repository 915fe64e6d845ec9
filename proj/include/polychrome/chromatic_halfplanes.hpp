#pragma once

#include "polychrome/chromatic_points.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace polychrome {

/// Either a depth-0 witness point (the family does not cover the plane) or a
/// covering sub-family of at most three half-planes.
struct CoverCertificate {
  std::optional<Point> witness;
  std::vector<int> cover_subset;
  bool covers() const { return !witness.has_value(); }
};

struct PeelingTrace {
  std::vector<std::vector<int>> layers;  // disjoint covering subsets, colors 1..i
  std::vector<int> residual;
};

struct HalfPlaneColoring {
  Coloring coloring;
  PeelingTrace trace;
  std::optional<Point> witness;  // uncovered point used as the duality origin
};

inline void require_distinct_lines(const std::vector<HalfPlane>& H) {
  std::set<Line> seen;
  for (const auto& h : H)
    if (!seen.insert(h.boundary()).second)
      throw std::invalid_argument("duplicate boundary line in half-plane family");
}

namespace detail {

// Two closed half-planes cover the plane iff their normals are antiparallel
// and the boundary strips overlap (touching counts, the sets being closed).
inline bool pair_covers(const HalfPlane& h1, const HalfPlane& h2) {
  return h2.a() == -h1.a() && h2.b() == -h1.b() && h1.c() + h2.c() <= 0;
}

// Farkas certificate for the infeasibility of the three strict complements
// {n_i . x < c_i}: nonnegative lambda != 0 with sum lambda_i n_i = 0 and
// lambda . c <= 0. Up to scale the only candidate with full support is the
// cross-product vector below (the identity sum cross(n_{i+1}, n_{i+2}) n_i = 0
// holds for any three plane vectors); zero-support cases degenerate to pairs,
// which the caller checks separately.
inline bool triple_covers(const HalfPlane& h1, const HalfPlane& h2, const HalfPlane& h3) {
  auto cross = [](const HalfPlane& u, const HalfPlane& v) {
    return u.a() * v.b() - u.b() * v.a();
  };
  Rat l1 = cross(h2, h3), l2 = cross(h3, h1), l3 = cross(h1, h2);
  int smin = std::min({sgn(l1), sgn(l2), sgn(l3)});
  int smax = std::max({sgn(l1), sgn(l2), sgn(l3)});
  if (smin == 0 && smax == 0) return false;
  if (smin < 0 && smax > 0) return false;
  if (smax < 0 || (smax == 0 && smin < 0)) {
    l1 = -l1;
    l2 = -l2;
    l3 = -l3;
  }
  return l1 * h1.c() + l2 * h2.c() + l3 * h3.c() <= 0;
}

}  // namespace detail

/// Covering subset of size 2 or 3, lexicographically first; requires that one
/// exists (i.e. the family covers the plane).
inline std::vector<int> find_cover_subset(const std::vector<HalfPlane>& H) {
  const int n = static_cast<int>(H.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (detail::pair_covers(H[i], H[j])) return {i, j};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (detail::triple_covers(H[i], H[j], H[k])) return {i, j, k};
  throw std::invalid_argument("find_cover_subset: family does not cover the plane");
}

/// Exact cover decision. A union of closed half-planes covers the plane iff
/// some pair or triple does (Helly, applied to the open convex complements);
/// otherwise the open common complement is full-dimensional, so a depth-0
/// witness exists among the arrangement samples of the boundary lines.
inline CoverCertificate covers_plane(const std::vector<HalfPlane>& H) {
  const int n = static_cast<int>(H.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (detail::pair_covers(H[i], H[j])) return {std::nullopt, {i, j}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (detail::triple_covers(H[i], H[j], H[k])) return {std::nullopt, {i, j, k}};
  if (H.empty()) return {Point{0, 0}, {}};
  std::vector<Line> lines;
  lines.reserve(H.size());
  for (const auto& h : H) lines.push_back(h.boundary());
  for (const Point& cand : arrangement_sample_points(lines))
    if (depth(H, cand) == 0) return {cand, {}};
  throw std::logic_error("covers_plane: no covering triple and no depth-0 sample");
}

namespace detail {

// Colors the index set `ids` of H with `colors_avail` colors mapped onto the
// labels offset+1 .. offset+colors_avail, by dualizing each half-plane
// {a x + b y >= c} around the uncovered origin q to the point
// (a, b) / (c - a q.x - b q.y). For any point p, the duals of the half-planes
// containing p form a half-plane cut of the dual set, so a polychromatic
// point coloring of the duals pulls back.
inline void color_duals_polar(const std::vector<HalfPlane>& H, const std::vector<int>& ids,
                              const Point& q, int colors_avail, int offset,
                              std::vector<int>& out_colors) {
  if (ids.empty()) return;
  std::vector<Point> duals;
  duals.reserve(ids.size());
  for (int idx : ids) {
    const HalfPlane& h = H[idx];
    Rat cq = h.c() - h.a() * q.x - h.b() * q.y;
    if (cq <= 0) throw std::logic_error("duality origin is covered by a residual half-plane");
    duals.push_back({h.a() / cq, h.b() / cq});
  }
  PointSet D{duals};
  if (!in_general_position(D)) D = perturb_to_general_position(D, 0x706f6c79u);
  PointColoring pc = color_points(D, colors_avail);
  for (std::size_t t = 0; t < ids.size(); ++t)
    out_colors[ids[t]] = offset + pc.coloring.colors[t];
}

}  // namespace detail

/// k-coloring of a half-plane family such that every point of depth at least
/// 3k-2 is covered by all k colors: peel disjoint covering subsets (each gets
/// its own color), then polar-dualize the rest around an uncovered point and
/// color the dual point set.
inline HalfPlaneColoring color_halfplanes_3k2(const std::vector<HalfPlane>& H, int k) {
  if (k < 1) throw std::invalid_argument("color_halfplanes_3k2: k must be >= 1");
  require_distinct_lines(H);
  const int n = static_cast<int>(H.size());
  HalfPlaneColoring out;
  out.coloring.k = k;
  out.coloring.colors.assign(n, 1);

  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  int layers = 0;
  while (layers < k) {
    std::vector<HalfPlane> sub;
    sub.reserve(active.size());
    for (int idx : active) sub.push_back(H[idx]);
    CoverCertificate cert = covers_plane(sub);
    if (!cert.covers()) {
      out.witness = cert.witness;
      break;
    }
    std::vector<int> layer;
    for (int local : cert.cover_subset) layer.push_back(active[local]);
    for (int idx : layer) out.coloring.colors[idx] = layers + 1;
    std::vector<int> rest;
    for (int idx : active)
      if (std::find(layer.begin(), layer.end(), idx) == layer.end()) rest.push_back(idx);
    active = std::move(rest);
    out.trace.layers.push_back(std::move(layer));
    ++layers;
  }
  out.trace.residual = active;
  if (layers == k || active.empty()) return out;
  // A point of depth >= 3k-2 meets the residual in >= 3(k-layers)-2 >=
  // 2(k-layers)-1 half-planes, so k-layers dual colors suffice.
  detail::color_duals_polar(H, active, *out.witness, k - layers, layers, out.coloring.colors);
  return out;
}

/// k-coloring valid at depth 4k-3: split into upper and lower half-planes (a
/// shear removes vertical boundaries first), standard-dualize each side's
/// boundary lines and color the two dual point sets independently; a point of
/// depth 4k-3 has depth at least 2k-1 on one side.
inline Coloring color_halfplanes_4k3(const std::vector<HalfPlane>& H, int k) {
  if (k < 1) throw std::invalid_argument("color_halfplanes_4k3: k must be >= 1");
  require_distinct_lines(H);
  const int n = static_cast<int>(H.size());
  Coloring out;
  out.k = k;
  out.colors.assign(n, 1);
  if (n == 0) return out;

  // Smallest nonnegative integer shear (x, y) -> (x + s*y, y) leaving no
  // boundary line vertical; the transformed coefficients are (a, b - s*a, c).
  Int s = 0;
  for (bool clash = true; clash;) {
    clash = false;
    for (const auto& h : H)
      if (h.b() - Rat(s) * h.a() == 0) {
        ++s;
        clash = true;
        break;
      }
  }

  for (int side : {+1, -1}) {
    std::vector<int> ids;
    std::vector<Point> duals;
    for (int i = 0; i < n; ++i) {
      Rat b2 = H[i].b() - Rat(s) * H[i].a();
      if (sgn(b2) != side) continue;
      // boundary y = m x + g with m = -a/b', g = c/b'; dual point (m, -g)
      ids.push_back(i);
      duals.push_back({-H[i].a() / b2, -H[i].c() / b2});
    }
    if (ids.empty()) continue;
    PointSet D{duals};
    if (!in_general_position(D)) D = perturb_to_general_position(D, 0x64756173u);
    PointColoring pc = color_points(D, k);
    for (std::size_t t = 0; t < ids.size(); ++t) out.colors[ids[t]] = pc.coloring.colors[t];
  }
  return out;
}

}  // namespace polychrome
