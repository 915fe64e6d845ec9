#pragma once

#include "polychrome/chromatic_halfplanes.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace polychrome {

struct EpsNet {
  std::vector<int> indices;
  Rat eps;
  // True when the construction's size bound (< 2/eps primal and non-covering
  // dual, <= 2/eps covering dual, < c/eps generic) is met.
  bool size_bound_guaranteed = true;
};

namespace detail {

inline void check_eps(const Rat& eps) {
  if (eps <= 0 || eps > 1) throw std::invalid_argument("eps must lie in (0, 1]");
}

template <typename Hits>
inline std::vector<int> smallest_class(const Coloring& chi, Hits&& hits) {
  std::vector<std::vector<int>> classes(chi.k);
  for (std::size_t i = 0; i < chi.colors.size(); ++i)
    classes[chi.colors[i] - 1].push_back(static_cast<int>(i));
  std::stable_sort(classes.begin(), classes.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (auto& cls : classes)
    if (hits(cls)) return cls;
  throw std::logic_error("no color class hits every heavy hyperedge");
}

// Drops removable elements (left to right, restarting after each removal)
// while the class still hits every heavy edge, until the size target is met
// or nothing is removable. Returns whether the target was met.
template <typename Hits>
inline bool shrink_to_bound(std::vector<int>& net, const Rat& eps, const Rat& budget,
                            Hits&& hits) {
  auto over = [&] { return Rat(static_cast<int>(net.size())) * eps >= budget; };
  bool removed = true;
  while (over() && removed) {
    removed = false;
    for (std::size_t i = 0; i < net.size(); ++i) {
      std::vector<int> trial = net;
      trial.erase(trial.begin() + static_cast<long>(i));
      if (hits(trial)) {
        net = std::move(trial);
        removed = true;
        break;
      }
    }
  }
  return !over();
}

inline bool class_hits_all(const std::vector<int>& cls,
                           const std::vector<PairSides::Bits>& heavy, int n) {
  PairSides::Bits b(n);
  for (int v : cls) b.set(v);
  for (const auto& e : heavy)
    if (!e.intersects(b)) return false;
  return true;
}

inline bool class_hits_all_sets(const std::vector<int>& cls,
                                const std::set<std::vector<int>>& heavy) {
  for (const auto& e : heavy) {
    bool hit = false;
    for (int v : cls)
      if (std::binary_search(e.begin(), e.end(), v)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace detail

/// Transversal of every cut containing at least eps*n points: color with
/// k = floor((ceil(eps n) + 1) / 2) colors at threshold 2k-1 <= ceil(eps n)
/// and keep the smallest color class, shrinking greedily if needed.
inline EpsNet epsnet_points(const PointSet& P, const Rat& eps) {
  detail::check_eps(eps);
  if (P.empty()) throw std::invalid_argument("epsnet_points: empty point set");
  const int n = static_cast<int>(P.size());
  const Int m_big = ceil_int(eps * n);
  const int m = static_cast<int>(m_big);
  const int k = (m + 1) / 2;
  PairSides ps{P};
  PointColoring pc = color_points(ps, k);
  auto heavy = ps.cut_bits_of_min_size(ps.full_mask(), static_cast<std::size_t>(m));
  auto hits = [&](const std::vector<int>& cls) { return detail::class_hits_all(cls, heavy, n); };
  EpsNet net{detail::smallest_class(pc.coloring, hits), eps, true};
  net.size_bound_guaranteed = detail::shrink_to_bound(net.indices, eps, Rat(2), hits);
  return net;
}

/// Transversal of every point of depth at least eps*|H|: a covering family
/// contributes a covering subset of size <= 3; otherwise the family is
/// polar-dualized around an uncovered point and the point machinery applies
/// (the half-planes containing any point p dualize to a half-plane cut).
inline EpsNet epsnet_halfplanes(const std::vector<HalfPlane>& H, const Rat& eps) {
  detail::check_eps(eps);
  if (H.empty()) throw std::invalid_argument("epsnet_halfplanes: empty family");
  require_distinct_lines(H);
  const int n = static_cast<int>(H.size());
  CoverCertificate cert = covers_plane(H);
  if (cert.covers()) {
    EpsNet net{cert.cover_subset, eps, true};
    net.size_bound_guaranteed = Rat(static_cast<int>(net.indices.size())) * eps <= 2;
    return net;
  }
  const Point& q = *cert.witness;
  std::vector<Point> duals;
  duals.reserve(H.size());
  for (const auto& h : H) {
    Rat cq = h.c() - h.a() * q.x - h.b() * q.y;
    duals.push_back({h.a() / cq, h.b() / cq});
  }
  const int m = static_cast<int>(ceil_int(eps * n));
  const int k = (m + 1) / 2;
  PointSet D0{duals};
  PointSet D = in_general_position(D0) ? D0 : perturb_to_general_position(D0, 0x6e657421u);
  PointColoring pc = color_points(D, k);
  // Heavy patterns live on the unperturbed duals; cuts there are a superset
  // of the realizable depth patterns, so hitting them all is sufficient.
  std::set<std::vector<int>> heavy;
  for (auto& ids : detail::sweep_cut_sets(D0.points()))
    if (ids.size() >= static_cast<std::size_t>(m)) heavy.insert(ids);
  auto hits = [&](const std::vector<int>& cls) { return detail::class_hits_all_sets(cls, heavy); };
  EpsNet net{detail::smallest_class(pc.coloring, hits), eps, true};
  net.size_bound_guaranteed = detail::shrink_to_bound(net.indices, eps, Rat(2), hits);
  return net;
}

/// Generic recipe: with a colorer that is polychromatic at
/// threshold c*k - (c-1), the largest k with c*k - (c-1) <= ceil(eps n) gives
/// a smallest class of size < c/eps.
inline EpsNet epsnet_generic(const RangeSpace& space, int c,
                             const std::function<Coloring(const PointSet&, int)>& colorer,
                             const Rat& eps) {
  if (c < 1) throw std::invalid_argument("epsnet_generic: c must be >= 1");
  detail::check_eps(eps);
  const int n = static_cast<int>(space.ground.size());
  if (n == 0) throw std::invalid_argument("epsnet_generic: empty ground set");
  const int m = static_cast<int>(ceil_int(eps * n));
  const int k = (m - 1) / c + 1;
  Coloring chi = colorer(space.ground, k);
  if (static_cast<int>(chi.colors.size()) != n || chi.k != k)
    throw std::invalid_argument("epsnet_generic: colorer output malformed");
  std::set<std::vector<int>> heavy;
  for (const auto& e : space.edges)
    if (e.indices.size() >= static_cast<std::size_t>(m)) heavy.insert(e.indices);
  auto hits = [&](const std::vector<int>& cls) { return detail::class_hits_all_sets(cls, heavy); };
  EpsNet net{detail::smallest_class(chi, hits), eps, true};
  net.size_bound_guaranteed = detail::shrink_to_bound(net.indices, eps, Rat(c), hits);
  return net;
}

}  // namespace polychrome
