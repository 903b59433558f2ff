#pragma once

// Snake graphs: one square tile per crossing, glued north or east along the
// connecting arcs, embedded on the integer grid with tile 1 at the origin.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "snakes/error.hpp"
#include "snakes/surface.hpp"

namespace snakes {

struct Point {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;
};

enum class Side : std::size_t { North = 0, East = 1, South = 2, West = 3 };
enum class Glue { North, East };

inline const char* side_name(Side s) {
  switch (s) {
    case Side::North: return "N";
    case Side::East: return "E";
    case Side::South: return "S";
    case Side::West: return "W";
  }
  return "?";
}

struct Tile {
  std::size_t index = 0;  // 1-based
  int diagonal = 0;       // i_k
  std::array<int, 4> sides{};  // indexed by Side
  int rel_orientation = 1;
  Point pos;

  int side(Side s) const { return sides[static_cast<std::size_t>(s)]; }
  Point sw() const { return pos; }
  Point se() const { return {pos.x + 1, pos.y}; }
  Point nw() const { return {pos.x, pos.y + 1}; }
  Point ne() const { return {pos.x + 1, pos.y + 1}; }

  bool contains(Point p) const { return p.x >= pos.x && p.x <= pos.x + 1 && p.y >= pos.y && p.y <= pos.y + 1; }
};

struct Edge {
  Point u;  // u < v
  Point v;
  int label = 0;
  bool boundary = true;           // lies in exactly one tile
  std::vector<std::size_t> tiles; // 1-based tiles containing the edge
};

struct SnakeGraph {
  std::size_t n = 0;  // rank of the cluster algebra
  std::vector<int> crossings;
  std::vector<Tile> tiles;
  std::vector<Glue> glue;  // d - 1 entries
  std::vector<Point> vertices;  // sorted
  // Non-diagonal edges; tile 1 owns S, W, N, E and each later tile owns its sides
  // other than the one shared with its predecessor, in the order S, W, N, E.
  std::vector<Edge> edges;
  std::vector<std::size_t> first_edge;  // first edge id owned by each tile, plus a sentinel

  std::size_t size() const noexcept { return tiles.size(); }

  std::size_t vertex_id(Point p) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
    if (it == vertices.end() || *it != p) throw InternalError("point is not a vertex of the snake graph");
    return static_cast<std::size_t>(it - vertices.begin());
  }

  std::optional<std::size_t> find_edge(Point a, Point b) const {
    if (b < a) std::swap(a, b);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i].u == a && edges[i].v == b) return i;
    return std::nullopt;
  }

  /// Edge ids of tile k (1-based) in the order N, E, S, W.
  std::array<std::size_t, 4> tile_edges(std::size_t k) const {
    const Tile& t = tiles.at(k - 1);
    return {*find_edge(t.nw(), t.ne()), *find_edge(t.se(), t.ne()), *find_edge(t.sw(), t.se()),
            *find_edge(t.sw(), t.nw())};
  }

  /// Last tile (1-based) containing vertex p.
  std::size_t last_tile(Point p) const {
    std::size_t last = 0;
    for (const Tile& t : tiles)
      if (t.contains(p)) last = t.index;
    return last;
  }
};

namespace detail {

inline std::pair<Point, Point> side_points(const Tile& t, Side s) {
  switch (s) {
    case Side::North: return {t.nw(), t.ne()};
    case Side::East: return {t.se(), t.ne()};
    case Side::South: return {t.sw(), t.se()};
    case Side::West: return {t.sw(), t.nw()};
  }
  throw InternalError("bad side");
}

/// Fills vertices, edges and ownership from the tiles.
inline void finish_graph(SnakeGraph& g) {
  std::map<std::pair<Point, Point>, std::size_t> index;
  g.edges.clear();
  g.first_edge.clear();
  for (const Tile& t : g.tiles) {
    g.first_edge.push_back(g.edges.size());
    for (Side s : {Side::South, Side::West, Side::North, Side::East}) {
      auto [a, b] = side_points(t, s);
      const int label = t.side(s);
      auto it = index.find({a, b});
      if (it != index.end()) {
        Edge& e = g.edges[it->second];
        if (e.label != label) throw InternalError("tiles disagree on the label of a shared edge");
        e.tiles.push_back(t.index);
        e.boundary = false;
        continue;
      }
      index.emplace(std::make_pair(a, b), g.edges.size());
      g.edges.push_back(Edge{a, b, label, true, {t.index}});
    }
  }
  g.first_edge.push_back(g.edges.size());
  std::vector<Point> pts;
  for (const Tile& t : g.tiles)
    for (Point p : {t.sw(), t.se(), t.nw(), t.ne()}) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  g.vertices = std::move(pts);
}

}  // namespace detail

/// Builds G_{T,γ}. Tile k has relative orientation +1 for odd k and -1 for even k;
/// its upper-right half is Δ_k and its lower-left half is Δ_{k-1}. With Δ_k read
/// clockwise from i_k as (i_k, u, v), the north side is u and the east side v
/// (swapped for orientation -1); likewise Δ_{k-1} gives south and west.
inline SnakeGraph build_snake(const Triangulation& t, const ArcSpec& a) {
  const ArcWalk w = connecting_arcs(t, a);
  const std::size_t d = a.crossings.size();
  SnakeGraph g;
  g.n = static_cast<std::size_t>(t.n);
  g.crossings = a.crossings;
  Point pos{0, 0};
  for (std::size_t k = 1; k <= d; ++k) {
    const int ik = a.crossings[k - 1];
    const Triangle upper = rotate_to(t.triangles[w.triangles[k]], ik);
    const Triangle lower = rotate_to(t.triangles[w.triangles[k - 1]], ik);
    Tile tile;
    tile.index = k;
    tile.diagonal = ik;
    tile.rel_orientation = (k % 2 == 1) ? 1 : -1;
    tile.pos = pos;
    auto set = [&](Side s, int label) { tile.sides[static_cast<std::size_t>(s)] = label; };
    if (tile.rel_orientation == 1) {
      set(Side::North, upper[1]);
      set(Side::East, upper[2]);
      set(Side::South, lower[1]);
      set(Side::West, lower[2]);
    } else {
      set(Side::North, upper[2]);
      set(Side::East, upper[1]);
      set(Side::South, lower[2]);
      set(Side::West, lower[1]);
    }
    if (k < d) {
      const int conn = w.connecting[k - 1];
      if (tile.side(Side::North) == conn) {
        g.glue.push_back(Glue::North);
        pos = {pos.x, pos.y + 1};
      } else if (tile.side(Side::East) == conn) {
        g.glue.push_back(Glue::East);
        pos = {pos.x + 1, pos.y};
      } else {
        throw InternalError("connecting arc is neither the north nor the east side");
      }
    }
    g.tiles.push_back(tile);
  }
  detail::finish_graph(g);
  return g;
}

/// Mirror image in the line y = x: swaps north with east and south with west,
/// and reverses every relative orientation.
inline SnakeGraph reflect(const SnakeGraph& g) {
  SnakeGraph out;
  out.n = g.n;
  out.crossings = g.crossings;
  for (Tile t : g.tiles) {
    std::swap(t.sides[static_cast<std::size_t>(Side::North)], t.sides[static_cast<std::size_t>(Side::East)]);
    std::swap(t.sides[static_cast<std::size_t>(Side::South)], t.sides[static_cast<std::size_t>(Side::West)]);
    t.pos = {t.pos.y, t.pos.x};
    t.rel_orientation = -t.rel_orientation;
    out.tiles.push_back(t);
  }
  for (Glue gl : g.glue) out.glue.push_back(gl == Glue::North ? Glue::East : Glue::North);
  detail::finish_graph(out);
  return out;
}

/// The lifted triangles Δ_0..Δ_d glued in a chain along the crossed arcs: a
/// triangulated (d+3)-gon whose arcs remember the labels they cover.
struct FanPolygon {
  struct Arc {
    std::size_t from = 0;  // direction as a side of the first triangle using it
    std::size_t to = 0;
    int label = 0;
    bool interior = false;
  };
  std::size_t vertex_count = 0;
  std::vector<Arc> arcs;
  std::vector<std::array<std::size_t, 3>> triangles;  // arc ids, clockwise from the entering crossing
  std::vector<std::size_t> interior;                  // arc id of the k-th crossing
  std::size_t source = 0;
  std::size_t target = 0;

  /// Arc id of the side labelled `label` of lifted triangle j.
  std::size_t arc_in(std::size_t j, int label) const {
    for (std::size_t id : triangles.at(j))
      if (arcs[id].label == label) return id;
    throw InternalError("label is not a side of the lifted triangle");
  }
};

inline FanPolygon fan_polygon(const Triangulation& t, const ArcSpec& a) {
  const ArcWalk w = connecting_arcs(t, a);
  const std::size_t d = a.crossings.size();
  FanPolygon f;
  auto add = [&](std::size_t from, std::size_t to, int label) {
    f.arcs.push_back({from, to, label, false});
    return f.arcs.size() - 1;
  };
  const Triangle d0 = rotate_to(t.triangles[w.triangles[0]], a.crossings[0]);
  f.vertex_count = 3;
  const std::size_t first = add(0, 1, d0[0]);
  f.triangles.push_back({first, add(1, 2, d0[1]), add(2, 0, d0[2])});
  f.source = 2;
  std::size_t entering = first;
  for (std::size_t k = 1; k <= d; ++k) {
    FanPolygon::Arc& shared = f.arcs[entering];
    shared.interior = true;
    f.interior.push_back(entering);
    const Triangle dk = rotate_to(t.triangles[w.triangles[k]], a.crossings[k - 1]);
    const std::size_t p = shared.to, q = shared.from, c = f.vertex_count++;
    const std::size_t u = add(q, c, dk[1]);
    const std::size_t v = add(c, p, dk[2]);
    f.triangles.push_back({entering, u, v});
    f.target = c;
    if (k < d) entering = f.arcs[u].label == a.crossings[k] ? u : v;
  }
  return f;
}

}  // namespace snakes
