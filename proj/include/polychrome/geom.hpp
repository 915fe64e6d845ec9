#pragma once

#include "polychrome/rational.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polychrome {

struct Point {
  Rat x;
  Rat y;
  bool operator==(const Point&) const = default;
};

inline bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

/// Sign of the cross product (q-p) x (r-p): +1 if r is strictly left of the
/// directed line p->q, -1 if strictly right, 0 if collinear.
inline int orientation(const Point& p, const Point& q, const Point& r) {
  Rat det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(det);
}

namespace detail {

// Rescales (a, b, c) by the unique positive factor that makes them coprime
// integers. Positive scaling preserves the inequality a*x + b*y >= c.
inline void primitive_scale(Rat& a, Rat& b, Rat& c) {
  Int l = lcm(lcm(denominator(a), denominator(b)), denominator(c));
  Int ia = numerator(a) * (l / denominator(a));
  Int ib = numerator(b) * (l / denominator(b));
  Int ic = numerator(c) * (l / denominator(c));
  Int g = gcd(gcd(abs(ia), abs(ib)), abs(ic));
  if (g == 0) g = 1;
  a = Rat(ia / g);
  b = Rat(ib / g);
  c = Rat(ic / g);
}

}  // namespace detail

/// Unoriented line {(x,y) : a*x + b*y = c} in a canonical form: coprime
/// integer coefficients with the first nonzero of (a, b) positive.
class Line {
 public:
  Line(Rat a, Rat b, Rat c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ == 0 && b_ == 0) throw std::invalid_argument("degenerate line: a = b = 0");
    detail::primitive_scale(a_, b_, c_);
    if (a_ < 0 || (a_ == 0 && b_ < 0)) {
      a_ = -a_;
      b_ = -b_;
      c_ = -c_;
    }
  }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }

  Rat eval(const Point& p) const { return a_ * p.x + b_ * p.y - c_; }
  bool through(const Point& p) const { return eval(p) == 0; }
  bool is_vertical() const { return b_ == 0; }
  bool through_origin() const { return c_ == 0; }

  bool operator==(const Line&) const = default;
  bool operator<(const Line& o) const {
    if (a_ != o.a_) return a_ < o.a_;
    if (b_ != o.b_) return b_ < o.b_;
    return c_ < o.c_;
  }

 private:
  Rat a_, b_, c_;
};

/// Closed half-plane {(x,y) : a*x + b*y >= c} in canonical form (coprime
/// integer coefficients, positive scale), so equal values mean equal sets.
class HalfPlane {
 public:
  HalfPlane(Rat a, Rat b, Rat c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_ == 0 && b_ == 0) throw std::invalid_argument("degenerate half-plane: a = b = 0");
    detail::primitive_scale(a_, b_, c_);
  }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }

  bool contains(const Point& p) const { return a_ * p.x + b_ * p.y >= c_; }
  Line boundary() const { return Line(a_, b_, c_); }

  bool operator==(const HalfPlane&) const = default;
  bool operator<(const HalfPlane& o) const {
    if (a_ != o.a_) return a_ < o.a_;
    if (b_ != o.b_) return b_ < o.b_;
    return c_ < o.c_;
  }

 private:
  Rat a_, b_, c_;
};

/// Indexed, duplicate-free point set. Index is identity.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> pts) : pts_(std::move(pts)) {
    auto sorted = pts_;
    std::sort(sorted.begin(), sorted.end(), lex_less);
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1]) throw std::invalid_argument("duplicate point in PointSet");
  }

  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }

  bool operator==(const PointSet&) const = default;

 private:
  std::vector<Point> pts_;
};

/// Vertices of the convex hull, counter-clockwise, starting at the
/// lexicographically smallest point. Collinear boundary points that are not
/// vertices are excluded; an all-collinear set yields its two endpoints.
inline std::vector<int> convex_hull(const PointSet& P) {
  const int n = static_cast<int>(P.size());
  if (n == 0) return {};
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return lex_less(P[a], P[b]); });
  if (n == 1) return idx;

  auto build = [&](auto begin, auto end) {
    std::vector<int> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             orientation(P[chain[chain.size() - 2]], P[chain.back()], P[*it]) <= 0)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<int> lower = build(idx.begin(), idx.end());
  std::vector<int> upper = build(idx.rbegin(), idx.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  if (lower.empty()) lower = {idx.front(), idx.back()};  // all points collinear
  return lower;
}

/// True iff no three points are collinear.
inline bool in_general_position(const PointSet& P) {
  const int n = static_cast<int>(P.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orientation(P[i], P[j], P[k]) == 0) return false;
  return true;
}

/// Exact membership in the closed convex hull of `S`.
inline bool in_convex_hull(const Point& p, const std::vector<Point>& S) {
  if (S.empty()) return false;
  PointSet ps{[&] {
    auto dedup = S;
    std::sort(dedup.begin(), dedup.end(), lex_less);
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
    return dedup;
  }()};
  auto hull = convex_hull(ps);
  if (hull.size() == 1) return p == ps[hull[0]];
  if (hull.size() == 2) {
    const Point& a = ps[hull[0]];
    const Point& b = ps[hull[1]];
    if (orientation(a, b, p) != 0) return false;
    Rat dot = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
    Rat len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
    return dot >= 0 && dot <= len2;
  }
  for (std::size_t e = 0; e < hull.size(); ++e) {
    const Point& a = ps[hull[e]];
    const Point& b = ps[hull[(e + 1) % hull.size()]];
    if (orientation(a, b, p) < 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Directional sweep enumeration of half-plane cuts.
//
// For a fixed direction u, the cuts {p : u.p >= c} are exactly the suffixes of
// the projection order (tie groups included wholesale, half-planes being
// closed). The grouped order only changes at directions perpendicular to a
// point-pair difference, so sweeping all such critical directions plus one
// representative inside each open arc between them yields the complete family
// {P cap h : h a closed half-plane} for an arbitrary finite point set.
// ---------------------------------------------------------------------------

namespace detail {

using Dir = std::pair<Int, Int>;

inline Dir primitive_dir(const Rat& dx, const Rat& dy) {
  Int l = lcm(denominator(dx), denominator(dy));
  Int ix = numerator(dx) * (l / denominator(dx));
  Int iy = numerator(dy) * (l / denominator(dy));
  Int g = gcd(abs(ix), abs(iy));
  if (g == 0) g = 1;
  return {ix / g, iy / g};
}

inline Int dir_cross(const Dir& a, const Dir& b) { return a.first * b.second - a.second * b.first; }
inline Int dir_dot(const Dir& a, const Dir& b) { return a.first * b.first + a.second * b.second; }

// Angular order over [0, 2pi), starting at direction (1, 0).
inline bool dir_angle_less(const Dir& a, const Dir& b) {
  auto half = [](const Dir& d) { return (d.second > 0 || (d.second == 0 && d.first > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  Int cr = dir_cross(a, b);
  if (cr != 0) return cr > 0;
  return false;
}

inline std::vector<Dir> sweep_directions(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<Dir> dirs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat dx = pts[j].x - pts[i].x, dy = pts[j].y - pts[i].y;
      Dir perp = primitive_dir(-dy, dx);
      dirs.push_back(perp);
      dirs.push_back({-perp.first, -perp.second});
    }
  if (dirs.empty()) {
    dirs.push_back({1, 0});
    dirs.push_back({-1, 0});
  }
  std::sort(dirs.begin(), dirs.end(), dir_angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  // One representative inside each open arc between consecutive criticals.
  // Criticals come in antipodal pairs, so every arc spans at most pi.
  const std::size_t m = dirs.size();
  std::vector<Dir> mids;
  for (std::size_t t = 0; t < m; ++t) {
    const Dir& u = dirs[t];
    const Dir& w = dirs[(t + 1) % m];
    Int cr = dir_cross(u, w);
    if (cr > 0) {
      mids.push_back(primitive_dir(Rat(u.first + w.first), Rat(u.second + w.second)));
    } else if (cr == 0 && dir_dot(u, w) < 0) {
      mids.push_back({-u.second, u.first});  // arc of exactly pi
    }
  }
  dirs.insert(dirs.end(), mids.begin(), mids.end());
  std::sort(dirs.begin(), dirs.end(), dir_angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  return dirs;
}

// All distinct cuts P cap h over closed half-planes h, each with a witness
// whose cut is exactly that index set. Works for degenerate inputs too.
inline std::map<std::vector<int>, HalfPlane> sweep_cuts(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  std::map<std::vector<int>, HalfPlane> cuts;
  for (const Dir& u : sweep_directions(pts)) {
    Rat ux(u.first), uy(u.second);
    std::vector<std::pair<Rat, int>> keyed(n);
    for (int i = 0; i < n; ++i) keyed[i] = {ux * pts[i].x + uy * pts[i].y, i};
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    std::vector<int> prefix;
    Rat cap = n == 0 ? Rat(1) : keyed.front().first + 1;
    cuts.emplace(std::vector<int>{}, HalfPlane(ux, uy, cap));
    int i = 0;
    while (i < n) {
      int j = i;
      while (j < n && keyed[j].first == keyed[i].first) ++j;
      for (int t = i; t < j; ++t) prefix.push_back(keyed[t].second);
      auto sorted = prefix;
      std::sort(sorted.begin(), sorted.end());
      cuts.emplace(std::move(sorted), HalfPlane(ux, uy, keyed[i].first));
      i = j;
    }
  }
  return cuts;
}

inline std::set<std::vector<int>> sweep_cut_sets(const std::vector<Point>& pts) {
  std::set<std::vector<int>> out;
  for (auto& [ids, h] : sweep_cuts(pts)) out.insert(ids);
  return out;
}

}  // namespace detail

/// Deterministic small-rational jitter that makes `P` generally positioned
/// while keeping every half-plane cut of `P` realizable (as an index set) on
/// the result. Identity when `P` is already in general position.
inline PointSet perturb_to_general_position(const PointSet& P, std::uint64_t seed) {
  if (in_general_position(P)) return P;
  const int n = static_cast<int>(P.size());

  // Offset budget: stay below half the minimum L1-surrogate distance from any
  // point to any non-incident point-pair line (fallback: half-min point gap).
  std::optional<Rat> bound;
  auto consider = [&](const Rat& v) {
    if (v <= 0) return;
    if (!bound || v < *bound) bound = v;
  };
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Rat dx = P[k].x - P[j].x, dy = P[k].y - P[j].y;
      Rat den = abs(dx) + abs(dy);
      consider(den / 2);
      for (int i = 0; i < n; ++i) {
        if (i == j || i == k) continue;
        Rat cr = abs(dx * (P[i].y - P[j].y) - dy * (P[i].x - P[j].x));
        if (cr != 0) consider(cr / den);
      }
    }
  Rat delta = bound ? *bound / 4 : Rat(1, 4);

  auto base_family = detail::sweep_cut_sets(P.points());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coin(-(1L << 20), 1L << 20);
  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Point> moved(P.points().begin(), P.points().end());
    for (auto& p : moved) {
      p.x += delta * Rat(coin(rng), Int(1) << 21);
      p.y += delta * Rat(coin(rng), Int(1) << 21);
    }
    auto dedup = moved;
    std::sort(dedup.begin(), dedup.end(), lex_less);
    if (std::adjacent_find(dedup.begin(), dedup.end()) != dedup.end()) continue;
    PointSet moved_set(moved);
    if (!in_general_position(moved_set)) continue;
    auto new_family = detail::sweep_cut_sets(moved);
    if (std::includes(new_family.begin(), new_family.end(), base_family.begin(),
                      base_family.end()))
      return moved_set;
  }
  throw std::runtime_error("perturb_to_general_position: retry budget exhausted");
}

// ---------------------------------------------------------------------------
// Radon partitions
// ---------------------------------------------------------------------------

struct RadonPartition {
  std::vector<int> part1;
  std::vector<int> part2;
  Point witness;  // lies in the convex hulls of both parts
};

/// Splits the input (>= 4 points; only the first four are inspected) into two
/// parts whose convex hulls share the returned witness point.
inline RadonPartition radon_partition(const PointSet& P) {
  const int n = static_cast<int>(P.size());
  if (n < 4) throw std::invalid_argument("radon_partition needs at least 4 points");

  // Affine dependence among the first four points: 3x4 homogeneous system
  // (sum l_i x_i = 0, sum l_i y_i = 0, sum l_i = 0), solved exactly.
  std::vector<std::vector<Rat>> m(3, std::vector<Rat>(4));
  for (int i = 0; i < 4; ++i) {
    m[0][i] = P[i].x;
    m[1][i] = P[i].y;
    m[2][i] = 1;
  }
  std::vector<int> pivot_col(3, -1);
  int row = 0;
  for (int col = 0; col < 4 && row < 3; ++col) {
    int pr = -1;
    for (int r = row; r < 3; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr == -1) continue;
    std::swap(m[row], m[pr]);
    for (int r = 0; r < 3; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[row][col];
      for (int cc = col; cc < 4; ++cc) m[r][cc] -= f * m[row][cc];
    }
    pivot_col[row] = col;
    ++row;
  }
  int free_col = -1;
  for (int col = 0; col < 4 && free_col < 0; ++col)
    if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end()) free_col = col;
  std::vector<Rat> lambda(4, Rat(0));
  lambda[free_col] = 1;
  for (int r = 0; r < 3; ++r) {
    if (pivot_col[r] < 0) continue;
    lambda[pivot_col[r]] = -m[r][free_col] / m[r][pivot_col[r]];
  }

  std::vector<int> pos, rest;
  Rat pos_sum(0);
  for (int i = 0; i < 4; ++i) {
    if (lambda[i] > 0) {
      pos.push_back(i);
      pos_sum += lambda[i];
    } else {
      rest.push_back(i);
    }
  }
  // sum lambda = 0 and lambda != 0, so both sides are nonempty
  Point witness{0, 0};
  for (int i : pos) {
    witness.x += lambda[i] / pos_sum * P[i].x;
    witness.y += lambda[i] / pos_sum * P[i].y;
  }
  for (int i = 4; i < n; ++i) rest.push_back(i);
  RadonPartition rp{std::move(pos), std::move(rest), std::move(witness)};
  if (rp.part2.size() < rp.part1.size()) std::swap(rp.part1, rp.part2);
  return rp;
}

// ---------------------------------------------------------------------------
// Polar point-line duality: point (a,b) <-> line a*x + b*y = 1
// ---------------------------------------------------------------------------

inline Point polar_dual_point(const Line& l) {
  if (l.through_origin()) throw std::domain_error("polar dual undefined for line through origin");
  return {l.a() / l.c(), l.b() / l.c()};
}

inline Line polar_dual_line(const Point& p) {
  if (p.x == 0 && p.y == 0) throw std::domain_error("polar dual undefined for the origin");
  return Line(p.x, p.y, 1);
}

/// True iff the line meets the closed segment [s0, s1].
inline bool segment_intersects_line(const Point& s0, const Point& s1, const Line& l) {
  int e0 = sgn(l.eval(s0)), e1 = sgn(l.eval(s1));
  return e0 == 0 || e1 == 0 || e0 != e1;
}

// ---------------------------------------------------------------------------
// Standard slope-intercept duality: point (a,b) <-> line y = a*x - b,
// line y = m*x + c <-> point (m, -c). A point lies above a line iff the
// line's dual point lies above the point's dual line.
// ---------------------------------------------------------------------------

inline Point standard_dual_point(const Line& l) {
  if (l.is_vertical()) throw std::domain_error("standard dual undefined for vertical line");
  Rat m = -l.a() / l.b();
  Rat y0 = l.c() / l.b();
  return {m, -y0};
}

inline Line standard_dual_line(const Point& p) { return Line(p.x, Rat(-1), p.y); }

/// +1 if p is strictly above the (non-vertical) line, 0 if incident, -1 below.
inline int side_of_line(const Point& p, const Line& l) {
  if (l.is_vertical()) throw std::domain_error("above/below undefined for vertical line");
  return sgn(l.b()) * sgn(l.a() * p.x + l.b() * p.y - l.c());
}

// ---------------------------------------------------------------------------
// Arrangement face sampling
// ---------------------------------------------------------------------------

namespace detail {

inline std::optional<Point> line_intersection(const Line& l1, const Line& l2) {
  Rat det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det == 0) return std::nullopt;
  return Point{(l1.c() * l2.b() - l2.c() * l1.b()) / det,
               (l1.a() * l2.c() - l2.a() * l1.c()) / det};
}

inline Point point_on_line(const Line& l) {
  if (l.b() != 0) return {Rat(0), l.c() / l.b()};
  return {l.c() / l.a(), Rat(0)};
}

}  // namespace detail

/// A finite candidate set meeting every face (cell, edge, vertex) of the line
/// arrangement: a containment signature realized anywhere in the plane is
/// realized by some candidate. Candidates are exact rationals.
inline std::vector<Point> arrangement_sample_points(const std::vector<Line>& raw_lines) {
  std::vector<Line> lines = raw_lines;
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  const int m = static_cast<int>(lines.size());

  std::vector<Point> anchors;
  anchors.push_back({0, 0});

  // Vertices, grouped per line by the parameter along the line direction.
  std::vector<std::vector<std::pair<Rat, Point>>> on_line(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto v = detail::line_intersection(lines[i], lines[j]);
      if (!v) continue;
      anchors.push_back(*v);
      for (int t : {i, j}) {
        Rat par = -lines[t].b() * v->x + lines[t].a() * v->y;  // projection on direction
        on_line[t].push_back({par, *v});
      }
    }

  // Along each line: a sample inside every edge (between consecutive vertices,
  // beyond the extremes, or anywhere if the line carries no vertex).
  for (int t = 0; t < m; ++t) {
    auto& vs = on_line[t];
    Rat dx = -lines[t].b(), dy = lines[t].a();
    if (vs.empty()) {
      anchors.push_back(detail::point_on_line(lines[t]));
      continue;
    }
    std::sort(vs.begin(), vs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rat norm2 = dx * dx + dy * dy;
    auto at_param = [&](const Rat& par) {
      // any point with the given projection works; offset from a vertex
      const auto& base = vs.front();
      Rat shift = (par - base.first) / norm2;
      return Point{base.second.x + shift * dx, base.second.y + shift * dy};
    };
    anchors.push_back(at_param(vs.front().first - norm2));
    anchors.push_back(at_param(vs.back().first + norm2));
    for (std::size_t i = 1; i < vs.size(); ++i)
      if (vs[i].first != vs[i - 1].first)
        anchors.push_back(at_param((vs[i].first + vs[i - 1].first) / 2));
  }

  // Far points: one ray per direction of interest, pushed beyond every line.
  std::vector<detail::Dir> dirs = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const Line& l : lines) {
    detail::Dir d = detail::primitive_dir(-l.b(), l.a());
    detail::Dir nrm = detail::primitive_dir(l.a(), l.b());
    for (auto v : {d, nrm}) {
      dirs.push_back(v);
      dirs.push_back({-v.first, -v.second});
    }
  }
  std::sort(dirs.begin(), dirs.end(), detail::dir_angle_less);
  dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
  {
    std::vector<detail::Dir> mids;
    for (std::size_t t = 0; t < dirs.size(); ++t) {
      const auto& u = dirs[t];
      const auto& w = dirs[(t + 1) % dirs.size()];
      Int cr = detail::dir_cross(u, w);
      if (cr > 0)
        mids.push_back(detail::primitive_dir(Rat(u.first + w.first), Rat(u.second + w.second)));
      else if (cr == 0 && detail::dir_dot(u, w) < 0)
        mids.push_back({-u.second, u.first});
    }
    dirs.insert(dirs.end(), mids.begin(), mids.end());
  }
  for (const auto& u : dirs) {
    Rat radius(1);
    for (const Line& l : lines) {
      Rat nu = l.a() * u.first + l.b() * u.second;
      if (nu == 0) continue;
      Rat need = abs(l.c()) / abs(nu) + 1;
      if (need > radius) radius = need;
    }
    anchors.push_back({radius * u.first, radius * u.second});
  }

  // Offset radius small enough that offsetting any anchor never crosses a
  // non-incident line: |n . d| <= delta (|a|+|b|) < |n . anchor - c|.
  std::optional<Rat> bound;
  for (const auto& a : anchors)
    for (const Line& l : lines) {
      Rat e = abs(l.a() * a.x + l.b() * a.y - l.c());
      if (e == 0) continue;
      Rat q = e / (abs(l.a()) + abs(l.b()));
      if (!bound || q < *bound) bound = q;
    }
  Rat delta = bound ? *bound / 2 : Rat(1);

  std::vector<Point> out;
  out.reserve(anchors.size() * 9);
  const int off[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  for (const auto& a : anchors) {
    out.push_back(a);
    for (auto& d : off) out.push_back({a.x + delta * d[0], a.y + delta * d[1]});
  }
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace polychrome
