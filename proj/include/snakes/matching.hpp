#pragma once

// Perfect matchings of snake graphs and the statistics attached to them.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "snakes/error.hpp"
#include "snakes/poly.hpp"
#include "snakes/snake.hpp"

namespace snakes {

/// Sorted edge ids of a perfect matching.
struct Matching {
  std::vector<std::size_t> edges;

  bool contains(std::size_t e) const { return std::binary_search(edges.begin(), edges.end(), e); }
  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

/// Exponents of y_1..y_n.
using YMonomial = std::vector<int>;

namespace detail {

struct TileStep {
  std::vector<std::size_t> owned;         // edge ids first appearing in this tile
  std::vector<std::size_t> retiring;      // vertex ids whose last tile is this one
};

inline std::vector<TileStep> tile_steps(const SnakeGraph& g) {
  std::vector<TileStep> steps(g.size());
  for (std::size_t k = 0; k < g.size(); ++k)
    for (std::size_t e = g.first_edge[k]; e < g.first_edge[k + 1]; ++e) steps[k].owned.push_back(e);
  for (std::size_t v = 0; v < g.vertices.size(); ++v) steps[g.last_tile(g.vertices[v]) - 1].retiring.push_back(v);
  return steps;
}

/// Calls visit(tile, subset mask, new covered set) for each admissible choice of
/// owned edges in a tile, subsets in ascending mask order.
template <typename Covered, typename Visit>
void for_each_choice(const SnakeGraph& g, const TileStep& step, const Covered& covered, Visit&& visit) {
  const std::size_t k = step.owned.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    Covered next = covered;
    bool ok = true;
    for (std::size_t b = 0; b < k && ok; ++b) {
      if (!(mask >> b & 1u)) continue;
      const Edge& e = g.edges[step.owned[b]];
      for (Point p : {e.u, e.v}) {
        const std::size_t v = g.vertex_id(p);
        if (next.count(v)) {
          ok = false;
          break;
        }
        next.insert(v);
      }
    }
    if (!ok) continue;
    for (std::size_t v : step.retiring) {
      if (!next.count(v)) {
        ok = false;
        break;
      }
      next.erase(v);
    }
    if (ok) visit(mask, std::move(next));
  }
}

}  // namespace detail

/// All perfect matchings, tile by tile; each tile picks a subset of the edges it
/// owns, and a vertex must be covered once its last tile has been processed.
/// Output is in lexicographic order of the per-tile subset masks.
inline std::vector<Matching> enumerate_matchings(const SnakeGraph& g) {
  const auto steps = detail::tile_steps(g);
  std::vector<Matching> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, const std::set<std::size_t>&)> rec = [&](std::size_t k,
                                                                           const std::set<std::size_t>& covered) {
    if (k == steps.size()) {
      Matching m{chosen};
      std::sort(m.edges.begin(), m.edges.end());
      out.push_back(std::move(m));
      return;
    }
    detail::for_each_choice(g, steps[k], covered, [&](std::uint32_t mask, std::set<std::size_t> next) {
      const std::size_t mark = chosen.size();
      for (std::size_t b = 0; b < steps[k].owned.size(); ++b)
        if (mask >> b & 1u) chosen.push_back(steps[k].owned[b]);
      rec(k + 1, next);
      chosen.resize(mark);
    });
  };
  rec(0, {});
  return out;
}

/// Number of perfect matchings by a transfer recurrence on the covered
/// vertices of the interface between consecutive tiles.
inline Integer count_matchings(const SnakeGraph& g) {
  const auto steps = detail::tile_steps(g);
  std::map<std::set<std::size_t>, Integer> states{{{}, Integer(1)}};
  for (const auto& step : steps) {
    std::map<std::set<std::size_t>, Integer> next;
    for (const auto& [covered, count] : states)
      detail::for_each_choice(g, step, covered,
                              [&](std::uint32_t, std::set<std::size_t> s) { next[std::move(s)] += count; });
    states = std::move(next);
  }
  Integer total = 0;
  for (const auto& [covered, count] : states)
    if (covered.empty()) total += count;
  return total;
}

/// Walk from the south-west corner of tile 1 alternating matching edges and
/// tile diagonals; the diagonal of tile k is crossed upward when entered at
/// its south-east corner.
struct InducedPath {
  std::vector<std::size_t> edges;  // d + 1 matching edges in walk order
  std::vector<bool> upward;        // d diagonal traversals
  std::vector<Point> points;       // 2d + 2 visited vertices
};

inline InducedPath induced_path(const SnakeGraph& g, const Matching& m) {
  std::map<Point, std::size_t> partner;
  for (std::size_t id : m.edges) {
    partner[g.edges[id].u] = id;
    partner[g.edges[id].v] = id;
  }
  InducedPath p;
  Point cur = g.tiles.front().sw();
  auto step = [&]() {
    auto it = partner.find(cur);
    if (it == partner.end()) throw InternalError("induced path reached an unmatched vertex");
    const Edge& e = g.edges[it->second];
    p.edges.push_back(it->second);
    p.points.push_back(cur);
    cur = e.u == cur ? e.v : e.u;
    p.points.push_back(cur);
  };
  for (const Tile& t : g.tiles) {
    step();
    if (cur == t.se()) {
      p.upward.push_back(true);
      cur = t.nw();
    } else if (cur == t.nw()) {
      p.upward.push_back(false);
      cur = t.se();
    } else {
      throw InternalError("induced path misses the diagonal of tile " + std::to_string(t.index));
    }
  }
  step();
  std::vector<std::size_t> sorted = p.edges;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != m.edges) throw InternalError("induced path does not use every matching edge");
  return p;
}

/// Product of y_{i_k} over the diagonal steps that run along γ's orientation:
/// upward in tiles of relative orientation +1, downward in the others.
inline YMonomial y_monomial_oriented(const SnakeGraph& g, const Matching& m) {
  const InducedPath p = induced_path(g, m);
  YMonomial y(g.n, 0);
  for (std::size_t k = 0; k < g.size(); ++k) {
    const bool oriented = g.tiles[k].rel_orientation == 1 ? p.upward[k] : !p.upward[k];
    if (oriented) ++y[g.tiles[k].diagonal - 1];
  }
  return y;
}

inline bool is_perfect_matching(const SnakeGraph& g, const std::vector<std::size_t>& edges) {
  std::vector<int> cover(g.vertices.size(), 0);
  for (std::size_t id : edges) {
    if (id >= g.edges.size()) return false;
    ++cover[g.vertex_id(g.edges[id].u)];
    ++cover[g.vertex_id(g.edges[id].v)];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

struct BoundaryMatchings {
  Matching minus;
  Matching plus;
};

/// The two matchings made of boundary edges only; M₋ is the one with y = 1.
inline BoundaryMatchings boundary_matchings(const SnakeGraph& g) {
  std::vector<Matching> found;
  for (Matching& m : enumerate_matchings(g))
    if (std::all_of(m.edges.begin(), m.edges.end(), [&](std::size_t e) { return g.edges[e].boundary; }))
      found.push_back(std::move(m));
  if (found.size() != 2) throw InternalError("expected exactly two all-boundary matchings");
  const YMonomial one(g.n, 0);
  const bool first_is_minus = y_monomial_oriented(g, found[0]) == one;
  const bool second_is_minus = y_monomial_oriented(g, found[1]) == one;
  if (first_is_minus == second_is_minus) throw InternalError("cannot tell M- from M+");
  return first_is_minus ? BoundaryMatchings{found[0], found[1]} : BoundaryMatchings{found[1], found[0]};
}

inline std::vector<std::size_t> symmetric_difference(const Matching& a, const Matching& b) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                                std::back_inserter(out));
  return out;
}

/// Tiles (as a 0-based membership vector) whose union has boundary M ⊖ M₋.
inline std::vector<bool> enclosed_tiles(const SnakeGraph& g, const Matching& m, const Matching& minus) {
  const auto diff = symmetric_difference(m, minus);
  const std::set<std::size_t> in_diff(diff.begin(), diff.end());
  std::vector<bool> inside(g.size(), false);
  for (std::size_t k = 1; k <= g.size(); ++k)
    for (std::size_t id : g.tile_edges(k))
      if (g.edges[id].boundary) {
        inside[k - 1] = in_diff.count(id) > 0;
        break;
      }
  for (std::size_t id = 0; id < g.edges.size(); ++id) {
    std::size_t covering = 0;
    for (std::size_t k : g.edges[id].tiles) covering += inside[k - 1] ? 1 : 0;
    if ((covering % 2 == 1) != (in_diff.count(id) > 0))
      throw InternalError("symmetric difference is not the boundary of a union of tiles");
  }
  return inside;
}

inline YMonomial y_monomial_symmdiff(const SnakeGraph& g, const Matching& m, const Matching& minus) {
  const auto inside = enclosed_tiles(g, m, minus);
  YMonomial y(g.n, 0);
  for (std::size_t k = 0; k < g.size(); ++k)
    if (inside[k]) ++y[g.tiles[k].diagonal - 1];
  return y;
}

/// Heights of the tiles from the superposition of M (black to white) and M₋
/// (white to black), with the south-west corner of tile 1 black. Crossing a
/// counter-clockwise contour from outside raises the height by one, so that
/// M₋ is the unique matching of minimal height.
inline std::vector<int> height_function(const SnakeGraph& g, const Matching& m, const Matching& minus) {
  auto black = [](Point p) { return ((p.x + p.y) % 2 + 2) % 2 == 0; };
  std::vector<std::pair<Point, Point>> arrows;
  for (std::size_t id : symmetric_difference(m, minus)) {
    const Edge& e = g.edges[id];
    const bool from_m = m.contains(id);
    const Point b = black(e.u) ? e.u : e.v;
    const Point w = black(e.u) ? e.v : e.u;
    arrows.push_back(from_m ? std::make_pair(b, w) : std::make_pair(w, b));
  }
  std::vector<int> h(g.size(), 0);
  for (std::size_t k = 0; k < g.size(); ++k) {
    // Winding number around the tile centre, in doubled coordinates, from a ray towards +x.
    const int cx = 2 * g.tiles[k].pos.x + 1, cy = 2 * g.tiles[k].pos.y + 1;
    int winding = 0;
    for (const auto& [a, b] : arrows) {
      if (a.x != b.x || 2 * a.x < cx) continue;
      const int lo = 2 * std::min(a.y, b.y), hi = 2 * std::max(a.y, b.y);
      if (lo < cy && cy < hi) winding += b.y > a.y ? 1 : -1;
    }
    h[k] = winding;
  }
  return h;
}

/// Labels of the matching edges along the induced path, boundary labels included.
inline std::vector<int> path_labels(const SnakeGraph& g, const Matching& m) {
  std::vector<int> out;
  for (std::size_t id : induced_path(g, m).edges) out.push_back(g.edges[id].label);
  return out;
}

/// w(M) with boundary variables set to 1.
inline ExpVector weight(const SnakeGraph& g, const Matching& m) {
  ExpVector e(g.n);
  for (std::size_t id : m.edges) {
    const int label = g.edges[id].label;
    if (label >= 1 && static_cast<std::size_t>(label) <= g.n) ++e.xexp[label - 1];
  }
  return e;
}

/// α_M folded into the fan: odd entries are matching edges, even entries the
/// crossed arcs, each given by its label and its arc id in the fan.
struct FoldedPath {
  std::vector<int> labels;          // 2d + 1 entries
  std::vector<std::size_t> fan_arcs;
};

inline FoldedPath fold_to_path(const SnakeGraph& g, const Matching& m, const FanPolygon& fan) {
  const InducedPath p = induced_path(g, m);
  FoldedPath out;
  auto lifted = [&](std::size_t id) {
    const Edge& e = g.edges[id];
    const Tile& t = g.tiles[e.tiles.front() - 1];
    // North and east sides lie in Δ_k, south and west in Δ_{k-1}.
    const bool upper = (e.u == t.nw() && e.v == t.ne()) || (e.u == t.se() && e.v == t.ne());
    return fan.arc_in(upper ? t.index : t.index - 1, e.label);
  };
  for (std::size_t k = 0; k <= g.size(); ++k) {
    out.labels.push_back(g.edges[p.edges[k]].label);
    out.fan_arcs.push_back(lifted(p.edges[k]));
    if (k == g.size()) break;
    out.labels.push_back(g.crossings[k]);
    out.fan_arcs.push_back(fan.interior[k]);
  }
  return out;
}

}  // namespace snakes
