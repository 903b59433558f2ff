#include "catch_amalgamated.hpp"
#include "support/fixtures.hpp"

using namespace snakes;

namespace {

std::vector<int> y_power(const SnakeGraph& g, const std::vector<int>& heights) {
  std::vector<int> y(g.n, 0);
  for (std::size_t k = 0; k < g.size(); ++k) y[g.tiles[k].diagonal - 1] += heights[k];
  return y;
}

/// Follows the folded path through the fan and reports whether it is one
/// connected walk from the source to the target.
bool is_walk(const FanPolygon& f, const FoldedPath& p) {
  std::size_t cur = f.source;
  for (std::size_t id : p.fan_arcs) {
    const auto& arc = f.arcs[id];
    if (arc.from == cur)
      cur = arc.to;
    else if (arc.to == cur)
      cur = arc.from;
    else
      return false;
  }
  return cur == f.target;
}

void check_all_statistics(const Triangulation& t, const ArcSpec& a) {
  const SnakeGraph g = build_snake(t, a);
  const auto ms = enumerate_matchings(g);
  const auto bm = boundary_matchings(g);
  const FanPolygon fan = fan_polygon(t, a);
  std::vector<int> full(g.n, 0);
  for (int i : a.crossings) ++full[i - 1];
  CHECK(y_monomial_oriented(g, bm.minus) == std::vector<int>(g.n, 0));
  CHECK(y_monomial_oriented(g, bm.plus) == full);
  std::size_t all_boundary = 0;
  for (const Matching& m : ms) {
    REQUIRE(is_perfect_matching(g, m.edges));
    CHECK(m.edges.size() == a.length() + 1);
    const auto y1 = y_monomial_symmdiff(g, m, bm.minus);
    const auto y2 = y_monomial_oriented(g, m);
    const auto h = height_function(g, m, bm.minus);
    CHECK(y1 == y2);
    CHECK(y_power(g, h) == y1);
    for (std::size_t k = 0; k < h.size(); ++k) {
      CHECK(h[k] >= 0);
      if (k > 0) CHECK(std::abs(h[k] - h[k - 1]) <= 1);
    }
    const FoldedPath p = fold_to_path(g, m, fan);
    REQUIRE(p.labels.size() == 2 * a.length() + 1);
    for (std::size_t k = 0; k < a.length(); ++k) CHECK(p.labels[2 * k + 1] == a.crossings[k]);
    CHECK(is_walk(fan, p));
    ExpVector numerator(g.n);
    for (std::size_t k = 0; k < p.labels.size(); k += 2)
      if (t.is_interior(p.labels[k])) ++numerator.xexp[p.labels[k] - 1];
    CHECK(numerator == weight(g, m));
    all_boundary += std::all_of(m.edges.begin(), m.edges.end(), [&](std::size_t e) { return g.edges[e].boundary; });
  }
  CHECK(all_boundary == 2);
  const auto flat = height_function(g, bm.minus, bm.minus);
  CHECK(std::all_of(flat.begin(), flat.end(), [](int v) { return v == 0; }));
}

}  // namespace

TEST_CASE("single tile matchings", "[matching]") {
  const SnakeGraph g = build_snake(fixtures::quadrilateral(), ArcSpec{{1}, 0});
  const auto ms = enumerate_matchings(g);
  CHECK(ms.size() == 2);
  CHECK(count_matchings(g) == 2);
  const auto bm = boundary_matchings(g);
  CHECK(bm.minus != bm.plus);
  CHECK(height_function(g, bm.plus, bm.minus) == std::vector<int>{1});
  CHECK(height_function(g, bm.minus, bm.minus) == std::vector<int>{0});
}

TEST_CASE("straight two-tile snake has three matchings", "[matching]") {
  for (const auto& p : fixtures::all_polygon_triangulations(5))
    for (const ArcSpec& a : fixtures::polygon_arcs(p)) {
      if (a.length() != 2) continue;
      const SnakeGraph g = build_snake(p.t, a);
      CHECK(fixtures::brute_force_matchings(g).size() == 3);
      CHECK(enumerate_matchings(g).size() == 3);
    }
}

TEST_CASE("worked annulus matchings", "[matching]") {
  const auto t = fixtures::annulus();
  const SnakeGraph g = build_snake(t, fixtures::annulus_arc());
  const auto ms = enumerate_matchings(g);
  // The printed list has 16 products; the graph has one more matching.
  CHECK(ms.size() == 17);
  CHECK(count_matchings(g) == 17);
  CHECK(fixtures::brute_force_matchings(g).size() == 17);

  const auto bm = boundary_matchings(g);
  std::multiset<std::pair<std::size_t, int>> minus;
  for (std::size_t id : bm.minus.edges) minus.insert({g.edges[id].tiles.front(), g.edges[id].label});
  CHECK(minus == std::multiset<std::pair<std::size_t, int>>{{1, 5}, {1, 2}, {3, 2}, {4, 1}, {4, 3}, {5, 2}, {6, 8}});
  ExpVector w(4);
  w.xexp = {1, 3, 1, 0};
  CHECK(weight(g, bm.minus) == w);
  CHECK(y_monomial_symmdiff(g, bm.plus, bm.minus) == std::vector<int>{2, 2, 1, 1});

  // Every printed product occurs with its printed y-monomial.
  std::multiset<std::pair<std::vector<int>, std::vector<int>>> computed;
  for (const Matching& m : ms) computed.insert({path_labels(g, m), y_monomial_oriented(g, m)});
  for (const auto& term : fixtures::annulus_listed_terms()) {
    INFO("path " << Catch::Detail::stringify(term.labels));
    CHECK(computed.count({term.labels, term.y}) == 1);
  }

  // First printed term: horizontal edges of tiles 1-3 and 5-6; encloses tiles 1, 3, 4, 5.
  const auto first = std::find_if(ms.begin(), ms.end(), [&](const Matching& m) {
    return path_labels(g, m) == std::vector<int>{4, 6, 8, 4, 4, 6, 8};
  });
  REQUIRE(first != ms.end());
  CHECK(enclosed_tiles(g, *first, bm.minus) == std::vector<bool>{true, false, true, true, true, false});
  CHECK(y_monomial_symmdiff(g, *first, bm.minus) == std::vector<int>{2, 0, 1, 1});
  CHECK(height_function(g, *first, bm.minus) == std::vector<int>{1, 0, 1, 1, 1, 0});
  for (std::size_t id : first->edges) {
    const Edge& e = g.edges[id];
    CHECK(e.u.y == e.v.y);
  }

  const FoldedPath p = fold_to_path(g, *first, fan_polygon(t, fixtures::annulus_arc()));
  CHECK(p.labels == std::vector<int>{4, 1, 6, 2, 8, 3, 4, 4, 4, 1, 6, 2, 8});
}

TEST_CASE("matching statistics agree on the corpus", "[matching]") {
  check_all_statistics(fixtures::annulus(), fixtures::annulus_arc());
  for (int n : {5, 6, 7})
    for (const auto& p : fixtures::all_polygon_triangulations(n))
      for (const ArcSpec& a : fixtures::polygon_arcs(p, true)) check_all_statistics(p.t, a);
  for (const ArcSpec& a : fixtures::all_annulus_walks(10)) check_all_statistics(fixtures::annulus(), a);
}

TEST_CASE("enumeration against brute force", "[matching]") {
  std::size_t checked = 0;
  auto compare = [&](const Triangulation& t, const ArcSpec& a) {
    const SnakeGraph g = build_snake(t, a);
    std::set<std::vector<std::size_t>> dp;
    for (const Matching& m : enumerate_matchings(g)) dp.insert(m.edges);
    const auto brute = fixtures::brute_force_matchings(g);
    CHECK(dp == brute);
    CHECK(count_matchings(g) == brute.size());
    CHECK(enumerate_matchings(g).size() == dp.size());
    ++checked;
  };
  for (int n : {5, 6, 7})
    for (const auto& p : fixtures::all_polygon_triangulations(n))
      for (const ArcSpec& a : fixtures::polygon_arcs(p)) compare(p.t, a);
  for (const ArcSpec& a : fixtures::all_annulus_walks(8)) compare(fixtures::annulus(), a);
  CHECK(checked > 0);
}

TEST_CASE("reflection preserves weights and coefficients", "[matching]") {
  for (const ArcSpec& a : fixtures::all_annulus_walks(7)) {
    const SnakeGraph g = build_snake(fixtures::annulus(), a);
    const SnakeGraph r = reflect(g);
    std::multiset<std::pair<std::vector<int>, std::vector<int>>> lhs, rhs;
    for (const Matching& m : enumerate_matchings(g)) lhs.insert({weight(g, m).xexp, y_monomial_oriented(g, m)});
    for (const Matching& m : enumerate_matchings(r)) rhs.insert({weight(r, m).xexp, y_monomial_oriented(r, m)});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("counts stay exact for long snakes", "[matching]") {
  const SnakeGraph g = build_snake(fixtures::annulus(), fixtures::all_annulus_walks(60).back());
  CHECK(g.size() == 60);
  const Integer c = count_matchings(g);
  CHECK(c > Integer(1) << 20);
}
