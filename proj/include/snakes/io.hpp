#pragma once

// JSON reading and writing for surfaces, arcs, snake graphs and polynomials.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "snakes/error.hpp"
#include "snakes/matching.hpp"
#include "snakes/poly.hpp"
#include "snakes/snake.hpp"
#include "snakes/surface.hpp"

namespace snakes {

using Json = nlohmann::json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

namespace detail {

inline const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

inline long integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<long>();
}

inline std::vector<int> int_array(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(static_cast<int>(integer(j[i], where + "/" + std::to_string(i))));
  return out;
}

inline std::optional<int> optional_int(const Json& j, const std::string& key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return static_cast<int>(integer(*it, where + "/" + key));
}

}  // namespace detail

/// `{"n", "m", "triangles": [[a,b,c],...], "genus"?, "boundaries"?, "marked"?}`; structure only,
/// consistency is left to validate().
inline Triangulation parse_triangulation(const Json& j, const std::string& where = "surface") {
  Triangulation t;
  t.n = static_cast<int>(detail::integer(detail::field(j, "n", where), where + "/n"));
  t.m = static_cast<int>(detail::integer(detail::field(j, "m", where), where + "/m"));
  const Json& tris = detail::field(j, "triangles", where);
  if (!tris.is_array()) throw ParseError(where + "/triangles: expected an array");
  for (std::size_t i = 0; i < tris.size(); ++i) {
    const std::string at = where + "/triangles/" + std::to_string(i);
    const auto v = detail::int_array(tris[i], at);
    if (v.size() != 3) throw ParseError(at + ": a triangle has exactly three sides");
    t.triangles.push_back({v[0], v[1], v[2]});
  }
  t.genus = detail::optional_int(j, "genus", where);
  t.boundaries = detail::optional_int(j, "boundaries", where);
  t.marked = detail::optional_int(j, "marked", where);
  return t;
}

inline ArcSpec parse_arc(const Json& j, const std::string& where = "arc") {
  ArcSpec a;
  a.crossings = detail::int_array(detail::field(j, "crossings", where), where + "/crossings");
  const long s = detail::integer(detail::field(j, "start_triangle", where), where + "/start_triangle");
  if (s < 0) throw ParseError(where + "/start_triangle: must be nonnegative");
  a.start_triangle = static_cast<std::size_t>(s);
  return a;
}

inline Json to_json(const Triangulation& t) {
  Json j{{"n", t.n}, {"m", t.m}, {"triangles", Json::array()}};
  for (const Triangle& tri : t.triangles) j["triangles"].push_back({tri[0], tri[1], tri[2]});
  if (t.genus) j["genus"] = *t.genus;
  if (t.boundaries) j["boundaries"] = *t.boundaries;
  if (t.marked) j["marked"] = *t.marked;
  return j;
}

inline Json to_json(const ArcSpec& a) { return Json{{"crossings", a.crossings}, {"start_triangle", a.start_triangle}}; }

inline Json to_json(const ExpVector& e) { return Json{{"x", e.xexp}, {"y", e.yexp}}; }

/// Coefficients are decimal strings so that no precision is lost.
inline Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"coefficient", c.str()}, {"x", e.xexp}, {"y", e.yexp}, {"text", render_monomial(e)}});
  return Json{{"nvars", p.nvars()}, {"text", p.to_string()}, {"terms", terms}};
}

inline Json point_json(Point p) { return Json::array({p.x, p.y}); }

inline Json to_json(const SnakeGraph& g) {
  Json j{{"n", g.n}, {"crossings", g.crossings}, {"tiles", Json::array()}, {"glue", Json::array()}};
  for (const Tile& t : g.tiles)
    j["tiles"].push_back({{"index", t.index},
                          {"diagonal", t.diagonal},
                          {"N", t.side(Side::North)},
                          {"E", t.side(Side::East)},
                          {"S", t.side(Side::South)},
                          {"W", t.side(Side::West)},
                          {"rel_orientation", t.rel_orientation},
                          {"pos", point_json(t.pos)}});
  for (Glue gl : g.glue) j["glue"].push_back(gl == Glue::North ? "N" : "E");
  j["vertices"] = Json::array();
  for (Point p : g.vertices) j["vertices"].push_back(point_json(p));
  j["edges"] = Json::array();
  for (const Edge& e : g.edges)
    j["edges"].push_back({{"u", point_json(e.u)},
                          {"v", point_json(e.v)},
                          {"label", e.label},
                          {"diagonal", false},
                          {"boundary", e.boundary},
                          {"tiles", e.tiles}});
  for (const Tile& t : g.tiles)
    j["edges"].push_back({{"u", point_json(t.nw())},
                          {"v", point_json(t.se())},
                          {"label", t.diagonal},
                          {"diagonal", true},
                          {"boundary", false},
                          {"tiles", {t.index}}});
  return j;
}

/// Rebuilds a snake graph from the tile records of a dump and checks the
/// dumped edge list against the rebuilt one.
inline SnakeGraph parse_snake(const Json& j, const std::string& where = "snake") {
  SnakeGraph g;
  g.n = static_cast<std::size_t>(detail::integer(detail::field(j, "n", where), where + "/n"));
  g.crossings = detail::int_array(detail::field(j, "crossings", where), where + "/crossings");
  const Json& tiles = detail::field(j, "tiles", where);
  if (!tiles.is_array() || tiles.size() != g.crossings.size())
    throw ParseError(where + "/tiles: expected one tile per crossing");
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    const std::string at = where + "/tiles/" + std::to_string(i);
    Tile t;
    t.index = i + 1;
    t.diagonal = static_cast<int>(detail::integer(detail::field(tiles[i], "diagonal", at), at + "/diagonal"));
    if (t.diagonal != g.crossings[i]) throw ParseError(at + ": diagonal differs from the crossing sequence");
    if (t.diagonal < 1 || static_cast<std::size_t>(t.diagonal) > g.n) throw ParseError(at + ": diagonal out of range");
    const char* names[] = {"N", "E", "S", "W"};
    for (std::size_t s = 0; s < 4; ++s)
      t.sides[s] = static_cast<int>(detail::integer(detail::field(tiles[i], names[s], at), at + "/" + names[s]));
    t.rel_orientation =
        static_cast<int>(detail::integer(detail::field(tiles[i], "rel_orientation", at), at + "/rel_orientation"));
    if (t.rel_orientation != 1 && t.rel_orientation != -1) throw ParseError(at + ": rel_orientation must be +-1");
    const auto pos = detail::int_array(detail::field(tiles[i], "pos", at), at + "/pos");
    if (pos.size() != 2) throw ParseError(at + "/pos: expected [x, y]");
    t.pos = {pos[0], pos[1]};
    if (i > 0) {
      const Point prev = g.tiles.back().pos;
      if (t.pos == Point{prev.x, prev.y + 1})
        g.glue.push_back(Glue::North);
      else if (t.pos == Point{prev.x + 1, prev.y})
        g.glue.push_back(Glue::East);
      else
        throw ParseError(at + "/pos: tile is not glued north or east of its predecessor");
    }
    g.tiles.push_back(t);
  }
  try {
    detail::finish_graph(g);
  } catch (const InternalError& e) {
    throw ParseError(where + ": " + e.what());
  }
  if (auto it = j.find("edges"); it != j.end()) {
    std::size_t plain = 0;
    for (const Json& e : *it)
      if (!e.value("diagonal", false)) ++plain;
    if (plain != g.edges.size()) throw ParseError(where + "/edges: edge list does not match the tiles");
  }
  return g;
}

inline Json to_json(const SnakeGraph& g, const Matching& m) {
  Json edges = Json::array();
  for (std::size_t id : m.edges)
    edges.push_back({{"u", point_json(g.edges[id].u)}, {"v", point_json(g.edges[id].v)}, {"label", g.edges[id].label}});
  return edges;
}

}  // namespace snakes
