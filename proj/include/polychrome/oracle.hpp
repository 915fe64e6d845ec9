#pragma once

#include "polychrome/chromatic_halfplanes.hpp"
#include "polychrome/epsnet.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace polychrome {

struct Violation {
  std::string kind;  // missing-color-edge | missing-color-point | unhit-edge |
                     // uncovered-depth-point
  std::vector<int> edge;      // offending hyperedge / containing set, if any
  std::optional<Point> point; // offending plane point, if any
  int missing_color = 0;      // 0 when not a color violation
};

struct VerifyResult {
  bool ok = true;
  std::optional<Violation> violation;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Independent hyperedge enumerator used to cross-check the sweep: for every
/// point pair, the strictly-left set and its unions with either or both of
/// the pair, on both sides, plus the empty and full sets. Under general
/// position this generates exactly the half-plane cuts.
inline std::set<std::vector<int>> oracle_hyperedges(const PointSet& P) {
  if (!in_general_position(P))
    throw std::invalid_argument("oracle_hyperedges: points not in general position");
  const int n = static_cast<int>(P.size());
  std::set<std::vector<int>> out;
  std::vector<int> full(n);
  for (int i = 0; i < n; ++i) full[i] = i;
  out.insert(std::vector<int>{});
  if (n > 0) out.insert(full);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> left, right;
      for (int p = 0; p < n; ++p) {
        if (p == i || p == j) continue;
        (orientation(P[i], P[j], P[p]) > 0 ? left : right).push_back(p);
      }
      for (const auto* base : {&left, &right}) {
        for (int mode = 0; mode < 4; ++mode) {
          std::vector<int> e = *base;
          if (mode & 1) e.push_back(i);
          if (mode & 2) e.push_back(j);
          std::sort(e.begin(), e.end());
          out.insert(std::move(e));
        }
      }
    }
  return out;
}

namespace detail {

inline void check_total(const Coloring& chi, std::size_t n) {
  if (chi.k < 1 || chi.colors.size() != n)
    throw std::invalid_argument("coloring is not total over the ground set");
  for (int c : chi.colors)
    if (c < 1 || c > chi.k) throw std::invalid_argument("color label out of range");
}

// 0 if all k colors appear among `ids`, else a missing color label.
inline int missing_color(const std::vector<int>& ids, const Coloring& chi) {
  std::vector<char> seen(static_cast<std::size_t>(chi.k) + 1, 0);
  for (int v : ids) seen[chi.colors[v]] = 1;
  for (int c = 1; c <= chi.k; ++c)
    if (!seen[c]) return c;
  return 0;
}

}  // namespace detail

/// ok iff every half-plane cut of at least m points contains all k colors.
inline VerifyResult verify_point_coloring(const PointSet& P, const Coloring& chi, int m) {
  detail::check_total(chi, P.size());
  for (const auto& e : oracle_hyperedges(P)) {
    if (e.size() < static_cast<std::size_t>(m)) continue;
    if (int c = detail::missing_color(e, chi)) {
      return {false, Violation{"missing-color-edge", e, std::nullopt, c}};
    }
  }
  return {true, std::nullopt};
}

/// ok iff every plane point contained in at least m half-planes of H sees all
/// k colors among its containing half-planes. Decided exactly on a finite
/// candidate set meeting every face of the boundary-line arrangement.
inline VerifyResult verify_halfplane_coloring(const std::vector<HalfPlane>& H,
                                              const Coloring& chi, int m) {
  detail::check_total(chi, H.size());
  require_distinct_lines(H);
  std::vector<Line> lines;
  lines.reserve(H.size());
  for (const auto& h : H) lines.push_back(h.boundary());
  for (const Point& p : arrangement_sample_points(lines)) {
    std::vector<int> in;
    for (int i = 0; i < static_cast<int>(H.size()); ++i)
      if (H[i].contains(p)) in.push_back(i);
    if (in.size() < static_cast<std::size_t>(m)) continue;
    if (int c = detail::missing_color(in, chi)) {
      return {false, Violation{"missing-color-point", in, p, c}};
    }
  }
  return {true, std::nullopt};
}

inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("POLYCHROME_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 4'000'000'000ull;
}

/// Least m such that some k-coloring of P makes every cut of at least m
/// points polychromatic, by exhaustive search over all colorings (the first
/// point's color is fixed by symmetry). Cost is metered against `budget`.
inline int exhaustive_best_threshold(const PointSet& P, int k,
                                     std::uint64_t budget = default_budget()) {
  if (k < 1) throw std::invalid_argument("exhaustive_best_threshold: k must be >= 1");
  const int n = static_cast<int>(P.size());
  if (n == 0 || n > 63) throw std::invalid_argument("exhaustive_best_threshold: need 1..63 points");
  auto family = oracle_hyperedges(P);
  std::vector<std::pair<std::uint64_t, int>> edges;  // (bitmask, size), size desc
  for (const auto& e : family) {
    std::uint64_t mask = 0;
    for (int v : e) mask |= std::uint64_t{1} << v;
    edges.push_back({mask, static_cast<int>(e.size())});
  }
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  std::uint64_t colorings = 1;
  for (int i = 1; i < n; ++i) {
    colorings *= static_cast<std::uint64_t>(k);
    if (colorings > budget) throw BudgetExceeded("exhaustive_best_threshold: coloring budget");
  }
  if (colorings > budget / (edges.size() + 1))
    throw BudgetExceeded("exhaustive_best_threshold: coloring budget");

  std::vector<int> chi(n, 1);
  int best = n + 1;
  while (true) {
    // threshold for this coloring: one past the largest non-polychromatic
    // cut; scanning by decreasing size, the first bad cut decides
    int cur = 1;  // the empty cut always misses a color
    const std::uint64_t all_colors = ((std::uint64_t{1} << k) - 1) << 1;
    for (const auto& [mask, size] : edges) {
      std::uint64_t seen = 0;
      for (std::uint64_t rest = mask; rest; rest &= rest - 1)
        seen |= std::uint64_t{1} << chi[std::countr_zero(rest)];
      if ((seen & all_colors) != all_colors) {
        cur = size + 1;
        break;
      }
    }
    if (cur < best) best = cur;
    int pos = n - 1;
    while (pos >= 1 && chi[pos] == k) chi[pos--] = 1;
    if (pos < 1) break;
    ++chi[pos];
  }
  return best;
}

/// Primal epsilon-net check: every cut of at least eps*|P| points meets the net.
inline VerifyResult verify_epsnet(const PointSet& P, const EpsNet& net) {
  const Rat bound = net.eps * static_cast<int>(P.size());
  std::set<int> members(net.indices.begin(), net.indices.end());
  for (int v : net.indices)
    if (v < 0 || v >= static_cast<int>(P.size()))
      throw std::invalid_argument("net index out of range");
  for (const auto& e : oracle_hyperedges(P)) {
    if (Rat(static_cast<int>(e.size())) < bound) continue;
    bool hit = false;
    for (int v : e)
      if (members.count(v)) {
        hit = true;
        break;
      }
    if (!hit) return {false, Violation{"unhit-edge", e, std::nullopt, 0}};
  }
  return {true, std::nullopt};
}

/// Dual epsilon-net check: every plane point of depth at least eps*|H| lies in
/// some net half-plane (decided on the arrangement candidate set).
inline VerifyResult verify_epsnet(const std::vector<HalfPlane>& H, const EpsNet& net) {
  const Rat bound = net.eps * static_cast<int>(H.size());
  for (int v : net.indices)
    if (v < 0 || v >= static_cast<int>(H.size()))
      throw std::invalid_argument("net index out of range");
  std::vector<Line> lines;
  lines.reserve(H.size());
  for (const auto& h : H) lines.push_back(h.boundary());
  for (const Point& p : arrangement_sample_points(lines)) {
    std::vector<int> in;
    for (int i = 0; i < static_cast<int>(H.size()); ++i)
      if (H[i].contains(p)) in.push_back(i);
    if (Rat(static_cast<int>(in.size())) < bound) continue;
    bool hit = false;
    for (int v : net.indices)
      if (H[v].contains(p)) {
        hit = true;
        break;
      }
    if (!hit) return {false, Violation{"uncovered-depth-point", in, p, 0}};
  }
  return {true, std::nullopt};
}

}  // namespace polychrome
