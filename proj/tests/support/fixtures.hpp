#pragma once

// Shared test data: the annulus example, polygon triangulations generated
// from convex geometry, random annulus arcs, and a brute-force matcher.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "snakes/snakes.hpp"

namespace fixtures {

using namespace snakes;

inline Triangulation annulus() { return Triangulation{4, 4, {{1, 6, 2}, {2, 3, 8}, {3, 4, 7}, {4, 5, 1}}, 0, 2, 4}; }
inline ArcSpec annulus_arc() { return ArcSpec{{1, 2, 3, 4, 1, 2}, 3}; }

inline Triangulation quadrilateral() { return Triangulation{1, 4, {{1, 2, 3}, {1, 4, 5}}, 0, 1, 4}; }

/// Annulus with one marked point on each boundary; its two arcs meet twice.
inline Triangulation kronecker() { return Triangulation{2, 2, {{1, 2, 3}, {1, 2, 4}}, 0, 2, 2}; }

inline Triangulation torus_disk() { return Triangulation{4, 1, {{1, 2, 3}, {1, 2, 4}, {3, 4, 5}}, 1, 1, 1}; }

/// Path-ordered products of the worked annulus example, as printed: edge labels
/// along the induced path and the y-exponents of each term.
struct ListedTerm {
  std::vector<int> labels;
  std::vector<int> y;
};

inline std::vector<ListedTerm> annulus_listed_terms() {
  return {
      {{4, 6, 8, 4, 4, 6, 8}, {2, 0, 1, 1}}, {{4, 6, 8, 4, 4, 1, 3}, {2, 1, 1, 1}},
      {{4, 6, 8, 4, 5, 2, 8}, {1, 0, 1, 1}}, {{4, 6, 2, 3, 1, 2, 8}, {1, 0, 0, 0}},
      {{4, 6, 2, 7, 5, 2, 8}, {1, 0, 0, 1}}, {{4, 6, 2, 7, 4, 6, 8}, {2, 0, 0, 1}},
      {{4, 1, 3, 4, 4, 6, 8}, {2, 1, 1, 1}}, {{4, 1, 3, 4, 4, 1, 3}, {2, 2, 1, 1}},
      {{4, 1, 3, 4, 5, 2, 8}, {1, 1, 1, 1}}, {{5, 2, 8, 4, 4, 6, 8}, {1, 0, 1, 1}},
      {{5, 2, 8, 4, 4, 1, 3}, {1, 1, 1, 1}}, {{5, 2, 8, 4, 5, 2, 8}, {0, 0, 1, 1}},
      {{5, 2, 2, 3, 1, 2, 8}, {0, 0, 0, 0}}, {{5, 2, 2, 7, 4, 6, 8}, {1, 0, 0, 1}},
      {{5, 2, 2, 7, 4, 1, 3}, {1, 1, 0, 1}}, {{5, 2, 2, 7, 5, 2, 8}, {0, 0, 0, 1}},
  };
}

/// Numerator of a path-ordered product with boundary labels (> n) dropped.
inline ExpVector listed_numerator(const ListedTerm& t, std::size_t n) {
  ExpVector e(n);
  for (int l : t.labels)
    if (l >= 1 && static_cast<std::size_t>(l) <= n) ++e.xexp[l - 1];
  e.yexp = t.y;
  return e;
}

inline LaurentPoly listed_numerator_sum() {
  LaurentPoly p(4);
  for (const auto& t : annulus_listed_terms()) p.add_term(listed_numerator(t, 4), 1);
  return p;
}

// ---------------------------------------------------------------------------
// Convex polygons. Vertices 0..N-1 counter-clockwise; a triangulation is a set
// of diagonals. Diagonals get labels 1..N-3 in sorted order, boundary sides
// (i, i+1) get N-2.. in order of i.

using Diagonal = std::pair<int, int>;

struct Polygon {
  int vertices = 0;
  std::vector<Diagonal> diagonals;
  std::map<Diagonal, int> label;
  Triangulation t;
};

namespace detail {

inline void triangulate(int lo, int hi, std::vector<std::vector<Diagonal>>& out) {
  // All triangulations of the sub-polygon lo..hi (consecutive vertices).
  if (hi - lo < 2) {
    out.push_back({});
    return;
  }
  for (int apex = lo + 1; apex < hi; ++apex) {
    std::vector<std::vector<Diagonal>> left, right;
    triangulate(lo, apex, left);
    triangulate(apex, hi, right);
    for (const auto& l : left)
      for (const auto& r : right) {
        std::vector<Diagonal> d = l;
        d.insert(d.end(), r.begin(), r.end());
        if (apex - lo > 1) d.push_back({lo, apex});
        if (hi - apex > 1) d.push_back({apex, hi});
        out.push_back(std::move(d));
      }
  }
}

}  // namespace detail

inline Polygon make_polygon(int n_vertices, std::vector<Diagonal> diagonals) {
  Polygon p;
  p.vertices = n_vertices;
  for (auto& [a, b] : diagonals)
    if (a > b) std::swap(a, b);
  std::sort(diagonals.begin(), diagonals.end());
  p.diagonals = diagonals;
  int next = 1;
  for (const Diagonal& d : diagonals) p.label[d] = next++;
  for (int i = 0; i < n_vertices; ++i) {
    Diagonal side{std::min(i, (i + 1) % n_vertices), std::max(i, (i + 1) % n_vertices)};
    p.label[side] = next++;
  }
  p.t.n = static_cast<int>(diagonals.size());
  p.t.m = n_vertices;
  p.t.genus = 0;
  p.t.boundaries = 1;
  p.t.marked = n_vertices;
  auto edge = [&](int a, int b) { return p.label.at({std::min(a, b), std::max(a, b)}); };
  for (int a = 0; a < n_vertices; ++a)
    for (int b = a + 1; b < n_vertices; ++b)
      for (int c = b + 1; c < n_vertices; ++c)
        if (p.label.count({a, b}) && p.label.count({b, c}) && p.label.count({a, c})) {
          // a, b, c is counter-clockwise; list the sides clockwise.
          p.t.triangles.push_back({edge(a, c), edge(c, b), edge(b, a)});
        }
  return p;
}

inline std::vector<Polygon> all_polygon_triangulations(int n_vertices) {
  std::vector<std::vector<Diagonal>> sets;
  detail::triangulate(0, n_vertices - 1, sets);
  std::vector<Polygon> out;
  for (auto& s : sets) out.push_back(make_polygon(n_vertices, std::move(s)));
  return out;
}

inline bool crosses(const Diagonal& x, const Diagonal& y) {
  const auto [a, b] = x;
  const auto [c, d] = y;
  auto strictly_between = [&](int v) { return v > a && v < b; };
  if (a == c || a == d || b == c || b == d) return false;
  return strictly_between(c) != strictly_between(d);
}

/// Crossing sequence of the diagonal u -> v, ordered by distance from u,
/// with the start triangle holding u and the first crossed diagonal.
inline ArcSpec polygon_arc(const Polygon& p, int u, int v) {
  const double pi = std::acos(-1.0);
  auto pt = [&](int i) {
    const double a = 2 * pi * i / p.vertices;
    return std::make_pair(std::cos(a), std::sin(a));
  };
  const auto [ux, uy] = pt(u);
  const auto [vx, vy] = pt(v);
  std::vector<std::pair<double, int>> hits;
  const Diagonal uv{std::min(u, v), std::max(u, v)};
  for (const Diagonal& d : p.diagonals) {
    if (!crosses(uv, d)) continue;
    const auto [cx, cy] = pt(d.first);
    const auto [dx, dy] = pt(d.second);
    // Solve u + s (v - u) = c + r (d - c) for s.
    const double ex = vx - ux, ey = vy - uy, fx = dx - cx, fy = dy - cy;
    const double den = ex * fy - ey * fx;
    const double s = ((cx - ux) * fy - (cy - uy) * fx) / den;
    hits.push_back({s, p.label.at(d)});
  }
  std::sort(hits.begin(), hits.end());
  ArcSpec a;
  for (const auto& h : hits) a.crossings.push_back(h.second);
  if (a.crossings.empty()) return a;
  Diagonal first;
  for (const auto& [d, l] : p.label)
    if (l == a.crossings[0]) first = d;
  const int uvlabel_a = p.label.at({std::min(u, first.first), std::max(u, first.first)});
  const int uvlabel_b = p.label.at({std::min(u, first.second), std::max(u, first.second)});
  for (std::size_t i = 0; i < p.t.triangles.size(); ++i) {
    const Triangle& tri = p.t.triangles[i];
    if (has_side(tri, a.crossings[0]) && has_side(tri, uvlabel_a) && has_side(tri, uvlabel_b)) a.start_triangle = i;
  }
  return a;
}

/// Every diagonal of the polygon that is not in the triangulation, both directions.
inline std::vector<ArcSpec> polygon_arcs(const Polygon& p, bool both_directions = false) {
  std::vector<ArcSpec> out;
  std::set<Diagonal> in_t(p.diagonals.begin(), p.diagonals.end());
  for (int u = 0; u < p.vertices; ++u)
    for (int v = 0; v < p.vertices; ++v) {
      if (u == v || (!both_directions && u > v)) continue;
      if ((v - u + p.vertices) % p.vertices == 1 || (u - v + p.vertices) % p.vertices == 1) continue;
      if (in_t.count({std::min(u, v), std::max(u, v)})) continue;
      out.push_back(polygon_arc(p, u, v));
    }
  return out;
}

/// Each triangle of the annulus has two interior sides, so a walk is fixed by
/// its start triangle, its first crossing and its length: 80 walks with d <= 10.
inline std::vector<ArcSpec> all_annulus_walks(std::size_t max_length) {
  const Triangulation t = annulus();
  std::vector<ArcSpec> out;
  for (std::size_t start = 0; start < t.triangles.size(); ++start)
    for (int first : t.triangles[start]) {
      if (!t.is_interior(first)) continue;
      for (std::size_t d = 1; d <= max_length; ++d) {
        ArcSpec a{{first}, start};
        std::size_t tri = t.across(start, first);
        while (a.crossings.size() < d) {
          int next = 0;
          for (int s : t.triangles[tri])
            if (t.is_interior(s) && s != a.crossings.back()) next = s;
          a.crossings.push_back(next);
          tri = t.across(tri, next);
        }
        out.push_back(a);
      }
    }
  return out;
}

/// Whether an annulus walk is a simple arc not parallel to the boundary. Laid
/// out in the universal cover, the triangles with boundary sides 5 and 6 sit on
/// one boundary line and those with 7 and 8 on the other; each walk ends at a
/// corner of its first and last triangle touching that triangle's boundary side.
/// Walks between the two lines are always arcs. A walk returning to its own
/// line is an arc only when it stays in one quadrilateral or is one of the two
/// loops around the far boundary.
inline bool annulus_walk_is_arc(const ArcSpec& a) {
  const Triangulation t = annulus();
  std::size_t tri = a.start_triangle;
  for (int c : a.crossings) tri = t.across(tri, c);
  auto line = [&](std::size_t i) {
    for (int s : t.triangles[i])
      if (t.is_boundary(s)) return s == 5 || s == 6;
    return false;
  };
  if (line(a.start_triangle) != line(tri) || a.length() == 1) return true;
  static const std::vector<std::vector<int>> loops{{2, 3, 4}, {4, 3, 2}, {4, 1, 2}, {2, 1, 4}};
  return std::find(loops.begin(), loops.end(), a.crossings) != loops.end();
}

inline std::vector<ArcSpec> all_annulus_arcs(std::size_t max_length) {
  std::vector<ArcSpec> out;
  for (ArcSpec& a : all_annulus_walks(max_length))
    if (annulus_walk_is_arc(a)) out.push_back(std::move(a));
  return out;
}

inline std::vector<ArcSpec> random_annulus_arcs(std::size_t count, unsigned seed) {
  auto all = all_annulus_arcs(10);
  std::mt19937 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(count, all.size()));
  return all;
}

/// Every walk through the triangles that never leaves by the side it entered,
/// up to the given number of crossings.
inline std::vector<ArcSpec> walk_arcs(const Triangulation& t, std::size_t max_length) {
  std::vector<ArcSpec> out;
  std::vector<std::pair<ArcSpec, std::size_t>> stack;
  for (std::size_t start = 0; start < t.triangles.size(); ++start)
    for (int first : t.triangles[start])
      if (t.is_interior(first)) stack.push_back({ArcSpec{{first}, start}, t.across(start, first)});
  while (!stack.empty()) {
    auto [a, tri] = stack.back();
    stack.pop_back();
    out.push_back(a);
    if (a.length() == max_length) continue;
    for (int s : t.triangles[tri]) {
      if (!t.is_interior(s) || s == a.crossings.back()) continue;
      ArcSpec next = a;
      next.crossings.push_back(s);
      stack.push_back({next, t.across(tri, s)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

/// Every (d+1)-subset of the edges that covers each vertex once, checked by
/// counting endpoints directly.
inline std::set<std::vector<std::size_t>> brute_force_matchings(const SnakeGraph& g) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t e = g.edges.size(), k = g.size() + 1;
  std::vector<bool> pick(e, false);
  std::fill(pick.end() - static_cast<long>(k), pick.end(), true);
  do {
    std::vector<std::size_t> chosen;
    std::map<Point, int> covered;
    bool ok = true;
    for (std::size_t i = 0; i < e && ok; ++i) {
      if (!pick[i]) continue;
      chosen.push_back(i);
      ok = ++covered[g.edges[i].u] == 1 && ++covered[g.edges[i].v] == 1;
    }
    if (ok && covered.size() == g.vertices.size()) out.insert(chosen);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

struct NamedTriangulation {
  std::string name;
  Triangulation t;
};

/// Every triangulation the suites sweep: all polygon triangulations up to the
/// heptagon, plus the annulus, Kronecker annulus and torus with a disk removed.
inline std::vector<NamedTriangulation> corpus_triangulations() {
  std::vector<NamedTriangulation> out;
  out.push_back({"quadrilateral", quadrilateral()});
  for (int n : {5, 6, 7}) {
    auto all = all_polygon_triangulations(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      out.push_back({std::to_string(n) + "-gon #" + std::to_string(i), all[i].t});
  }
  out.push_back({"annulus", annulus()});
  out.push_back({"kronecker", kronecker()});
  out.push_back({"torus with disk removed", torus_disk()});
  return out;
}

}  // namespace fixtures
