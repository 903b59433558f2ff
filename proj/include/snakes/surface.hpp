#pragma once

// Triangulated unpunctured surfaces given purely combinatorially: every
// triangle is the triple of its side labels read clockwise.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "snakes/error.hpp"
#include "snakes/int_matrix.hpp"

namespace snakes {

using Triangle = std::array<int, 3>;

/// Rotates t so that `label` comes first, keeping the cyclic order.
inline Triangle rotate_to(const Triangle& t, int label) {
  for (std::size_t i = 0; i < 3; ++i)
    if (t[i] == label) return {t[i], t[(i + 1) % 3], t[(i + 2) % 3]};
  throw LabelError("arc " + std::to_string(label) + " is not a side of the triangle");
}

inline bool has_side(const Triangle& t, int label) {
  return t[0] == label || t[1] == label || t[2] == label;
}

struct Triangulation {
  int n = 0;  // interior arcs 1..n
  int m = 0;  // boundary arcs n+1..n+m
  std::vector<Triangle> triangles;
  std::optional<int> genus;
  std::optional<int> boundaries;
  std::optional<int> marked;

  bool is_interior(int label) const noexcept { return label >= 1 && label <= n; }
  bool is_boundary(int label) const noexcept { return label > n && label <= n + m; }

  /// Indices of the triangles having `label` as a side, in increasing order.
  std::vector<std::size_t> triangles_with(int label) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < triangles.size(); ++i)
      if (has_side(triangles[i], label)) out.push_back(i);
    return out;
  }

  /// The triangle across interior arc `label` from triangle `from`.
  std::size_t across(std::size_t from, int label) const {
    for (std::size_t i : triangles_with(label))
      if (i != from) return i;
    throw LabelError("arc " + std::to_string(label) + " has no second triangle");
  }

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// Every violated invariant, one human-readable line each; empty when valid.
inline std::vector<std::string> validate(const Triangulation& t) {
  std::vector<std::string> out;
  if (t.n < 0 || t.m < 0) out.push_back("negative arc count");
  std::map<int, int> uses;
  for (std::size_t i = 0; i < t.triangles.size(); ++i) {
    const Triangle& tri = t.triangles[i];
    for (std::size_t s = 0; s < 3; ++s) {
      const int label = tri[s];
      if (label < 1 || label > t.n + t.m)
        out.push_back("triangle " + std::to_string(i) + ": label " + std::to_string(label) + " out of range 1.." +
                      std::to_string(t.n + t.m));
      for (std::size_t r = 0; r < s; ++r)
        if (tri[r] == label)
          out.push_back("triangle " + std::to_string(i) + ": repeated side " + std::to_string(label));
      ++uses[label];
    }
  }
  for (int label = 1; label <= t.n + t.m; ++label) {
    const int want = t.is_interior(label) ? 2 : 1;
    const int got = uses.count(label) ? uses[label] : 0;
    if (got != want)
      out.push_back("arc " + std::to_string(label) + (want == 2 ? " (interior)" : " (boundary)") + " occurs in " +
                    std::to_string(got) + " triangles, expected " + std::to_string(want));
  }
  if (3 * static_cast<long>(t.triangles.size()) != 2L * t.n + t.m)
    out.push_back("Euler count: 3t = " + std::to_string(3 * t.triangles.size()) +
                  " but 2n + m = " + std::to_string(2 * t.n + t.m));
  return out;
}

inline void require_valid(const Triangulation& t) {
  auto v = validate(t);
  if (!v.empty()) throw ValidationError(std::move(v));
}

struct RankCheck {
  bool ok = false;
  long expected_n = 0;
  long actual_n = 0;
  long expected_m = 0;
  long actual_m = 0;
};

/// Compares the arc counts with n = 6g + 3b + m - 6 and m = number of marked points.
inline RankCheck rank_check(const Triangulation& t, int genus, int boundaries, int marked) {
  if (genus < 0 || boundaries < 1 || marked < 1) throw DimensionError("need g >= 0, b >= 1, m >= 1");
  RankCheck r;
  r.expected_n = 6L * genus + 3L * boundaries + marked - 6;
  r.actual_n = t.n;
  r.expected_m = marked;
  r.actual_m = t.m;
  r.ok = r.expected_n == r.actual_n && r.expected_m == r.actual_m;
  return r;
}

struct Topology {
  int genus = 0;
  int boundaries = 0;
  int marked = 0;    // vertices lying on the boundary
  int punctures = 0; // vertices touching no boundary arc
  int euler_characteristic = 0;
};

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace detail

/// Recovers genus, boundary components and marked points by gluing corners.
/// Side s of a triangle runs from corner s to corner s+1 in the clockwise order;
/// gluing along an interior arc identifies the corners crosswise.
inline Topology topology(const Triangulation& t) {
  require_valid(t);
  const std::size_t nt = t.triangles.size();
  detail::UnionFind uf(3 * nt);
  auto corner = [](std::size_t tri, std::size_t c) { return 3 * tri + c % 3; };
  for (int label = 1; label <= t.n; ++label) {
    auto tr = t.triangles_with(label);
    auto pos = [&](std::size_t tri) {
      return static_cast<std::size_t>(std::find(t.triangles[tri].begin(), t.triangles[tri].end(), label) -
                                      t.triangles[tri].begin());
    };
    const std::size_t x = tr[0], y = tr[1], px = pos(x), py = pos(y);
    uf.unite(corner(x, px), corner(y, py + 1));
    uf.unite(corner(x, px + 1), corner(y, py));
  }
  std::set<std::size_t> vertices;
  for (std::size_t c = 0; c < 3 * nt; ++c) vertices.insert(uf.find(c));

  detail::UnionFind bd(3 * nt);
  std::set<std::size_t> on_boundary;
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t s = 0; s < 3; ++s)
      if (t.is_boundary(t.triangles[i][s])) {
        const std::size_t a = uf.find(corner(i, s)), b = uf.find(corner(i, s + 1));
        on_boundary.insert(a);
        on_boundary.insert(b);
        bd.unite(a, b);
      }
  std::set<std::size_t> components;
  for (std::size_t v : on_boundary) components.insert(bd.find(v));

  Topology out;
  out.marked = static_cast<int>(on_boundary.size());
  out.punctures = static_cast<int>(vertices.size() - on_boundary.size());
  out.boundaries = static_cast<int>(components.size());
  out.euler_characteristic = static_cast<int>(vertices.size()) - (t.n + t.m) + static_cast<int>(nt);
  const int twice_genus = 2 - out.boundaries - out.euler_characteristic;
  if (twice_genus < 0 || twice_genus % 2 != 0) throw InternalError("inconsistent Euler characteristic");
  out.genus = twice_genus / 2;
  return out;
}

/// Signed adjacency of interior arcs: each triangle contributes +1 to b_ij when
/// j immediately follows i in its clockwise triple, and -1 to b_ji.
inline IntMatrix b_matrix(const Triangulation& t) {
  require_valid(t);
  IntMatrix b(static_cast<std::size_t>(t.n), static_cast<std::size_t>(t.n));
  for (const Triangle& tri : t.triangles)
    for (std::size_t s = 0; s < 3; ++s) {
      const int i = tri[s], j = tri[(s + 1) % 3];
      if (!t.is_interior(i) || !t.is_interior(j)) continue;
      b(i - 1, j - 1) += 1;
      b(j - 1, i - 1) -= 1;
    }
  if (!b.is_skew_symmetric()) throw InternalError("exchange matrix is not skew-symmetric");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j) < -2 || b(i, j) > 2) throw InternalError("exchange matrix entry outside {0, +-1, +-2}");
  return b;
}

/// An arc as the ordered labels of the interior arcs it crosses, plus the
/// triangle (0-based index) holding its starting point.
struct ArcSpec {
  std::vector<int> crossings;
  std::size_t start_triangle = 0;

  std::size_t length() const noexcept { return crossings.size(); }
  friend bool operator==(const ArcSpec&, const ArcSpec&) = default;
  friend auto operator<=>(const ArcSpec&, const ArcSpec&) = default;
};

/// The triangle chain Δ_0..Δ_d met by an arc, and the third side τ_[γ_k] of
/// each intermediate triangle Δ_k (k = 1..d-1).
struct ArcWalk {
  std::vector<std::size_t> triangles;
  std::vector<int> connecting;
};

inline ArcWalk connecting_arcs(const Triangulation& t, const ArcSpec& a) {
  require_valid(t);
  const auto& c = a.crossings;
  if (c.empty()) throw ArcError(0, "empty crossing sequence");
  if (a.start_triangle >= t.triangles.size()) throw ArcError(0, "start triangle index out of range");
  for (std::size_t k = 0; k < c.size(); ++k)
    if (!t.is_interior(c[k]))
      throw ArcError(k + 1, "label " + std::to_string(c[k]) + " is not an interior arc");
  if (!has_side(t.triangles[a.start_triangle], c[0]))
    throw ArcError(0, "start triangle does not contain arc " + std::to_string(c[0]));

  ArcWalk w;
  w.triangles.push_back(a.start_triangle);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const std::size_t next = t.across(w.triangles.back(), c[k]);
    w.triangles.push_back(next);
    if (k + 1 == c.size()) break;
    if (c[k + 1] == c[k]) throw ArcError(k + 1, "arc leaves a triangle through the side it entered");
    const Triangle& tri = t.triangles[next];
    if (!has_side(tri, c[k + 1]))
      throw ArcError(k + 1, "arcs " + std::to_string(c[k]) + " and " + std::to_string(c[k + 1]) +
                                " share no triangle on the walk");
    for (int side : tri)
      if (side != c[k] && side != c[k + 1]) w.connecting.push_back(side);
  }
  return w;
}

/// The quadrilateral around diagonal k. Going clockwise its sides are
/// rho1, sigma1, rho2, sigma2, with rho1 and rho2 (resp. sigma1, sigma2) opposite;
/// rho1 and rho2 are the sides that follow k in the two triangles.
struct Quadrilateral {
  int diagonal = 0;
  int rho1 = 0;
  int sigma1 = 0;
  int rho2 = 0;
  int sigma2 = 0;
  std::size_t first_triangle = 0;   // (k, rho1, sigma1) before the flip
  std::size_t second_triangle = 0;  // (k, rho2, sigma2) before the flip
};

inline Quadrilateral quadrilateral(const Triangulation& t, int k) {
  if (!t.is_interior(k)) throw LabelError("flip: " + std::to_string(k) + " is not an interior arc");
  const auto tr = t.triangles_with(k);
  if (tr.size() != 2 || tr[0] == tr[1]) throw LabelError("flip: arc " + std::to_string(k) + " is self-folded");
  const Triangle a = rotate_to(t.triangles[tr[0]], k);
  const Triangle b = rotate_to(t.triangles[tr[1]], k);
  return Quadrilateral{k, a[1], a[2], b[1], b[2], tr[0], tr[1]};
}

/// Replaces diagonal k by the other diagonal of its quadrilateral. The new arc
/// keeps label k; triangles keep their slots and stay clockwise.
inline std::pair<Triangulation, Quadrilateral> flip(const Triangulation& t, int k) {
  require_valid(t);
  const Quadrilateral q = quadrilateral(t, k);
  Triangulation out = t;
  out.triangles[q.first_triangle] = {k, q.sigma1, q.rho2};
  out.triangles[q.second_triangle] = {k, q.sigma2, q.rho1};
  return {std::move(out), q};
}

/// Order-independent key: each triangle rotated to its smallest label, then sorted.
inline std::vector<Triangle> canonical_triangles(const Triangulation& t) {
  std::vector<Triangle> out;
  out.reserve(t.triangles.size());
  for (const Triangle& tri : t.triangles) out.push_back(rotate_to(tri, *std::min_element(tri.begin(), tri.end())));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace snakes
