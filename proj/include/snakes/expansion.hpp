#pragma once

// Laurent expansions of cluster variables from snake graphs: the sum over
// perfect matchings, and the equivalent sum over unions of tiles.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snakes/error.hpp"
#include "snakes/matching.hpp"
#include "snakes/oracle.hpp"
#include "snakes/poly.hpp"
#include "snakes/snake.hpp"
#include "snakes/surface.hpp"

namespace snakes {

struct ExpansionTerm {
  Matching matching;
  std::vector<int> path_labels;  // edge labels along the induced path, boundary arcs included
  ExpVector numerator;           // w(M) y(M)
};

struct Expansion {
  LaurentPoly laurent;
  std::vector<int> denominator;  // multiplicity of each arc in the crossing sequence
  std::vector<ExpansionTerm> terms;

  /// The numerator sum before division by the crossing monomial.
  LaurentPoly numerator() const {
    LaurentPoly p(denominator.size());
    for (const auto& t : terms) p.add_term(t.numerator, 1);
    return p;
  }
};

inline std::vector<int> crossing_exponents(std::size_t n, const std::vector<int>& crossings) {
  std::vector<int> d(n, 0);
  for (int i : crossings) ++d.at(static_cast<std::size_t>(i - 1));
  return d;
}

inline Expansion expand(const SnakeGraph& g) {
  Expansion out;
  out.denominator = crossing_exponents(g.n, g.crossings);
  LaurentPoly numerator(g.n);
  for (Matching& m : enumerate_matchings(g)) {
    ExpVector e = weight(g, m);
    e.yexp = y_monomial_oriented(g, m);
    numerator.add_term(e, 1);
    auto labels = path_labels(g, m);
    out.terms.push_back({std::move(m), std::move(labels), std::move(e)});
  }
  out.laurent = numerator.divide_by_x_monomial(out.denominator);
  return out;
}

inline Expansion expand(const Triangulation& t, const ArcSpec& a) { return expand(build_snake(t, a)); }

/// Number of maximal runs of consecutive tile indices in the subset; consecutive
/// tiles share an edge, while tiles meeting only at a corner are separate.
inline std::size_t component_count(std::uint64_t subset) {
  std::size_t c = 0;
  for (std::size_t k = 0; k < 64; ++k)
    if ((subset >> k & 1u) && (k == 0 || !(subset >> (k - 1) & 1u))) ++c;
  return c;
}

inline Expansion expand_via_subgraphs(const SnakeGraph& g) {
  const std::size_t d = g.size();
  if (d >= 63) throw DimensionError("subgraph expansion limited to fewer than 63 tiles");
  const Matching minus = boundary_matchings(g).minus;
  Expansion out;
  out.denominator = crossing_exponents(g.n, g.crossings);
  LaurentPoly numerator(g.n);
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << d); ++subset) {
    std::vector<std::size_t> covering(g.edges.size(), 0);
    std::size_t tiles = 0;
    for (std::size_t k = 1; k <= d; ++k) {
      if (!(subset >> (k - 1) & 1u)) continue;
      ++tiles;
      for (std::size_t id : g.tile_edges(k)) ++covering[id];
    }
    std::size_t minus_inside = 0;
    for (std::size_t id : minus.edges) minus_inside += covering[id] > 0 ? 1 : 0;
    if (minus_inside != tiles + component_count(subset)) continue;

    Matching m;
    for (std::size_t id = 0; id < g.edges.size(); ++id)
      if ((covering[id] % 2 == 1) != minus.contains(id)) m.edges.push_back(id);
    if (!is_perfect_matching(g, m.edges)) throw InternalError("boundary of a subgraph minus M- is not a matching");
    ExpVector e = weight(g, m);
    for (std::size_t k = 1; k <= d; ++k)
      if (subset >> (k - 1) & 1u) ++e.yexp[g.tiles[k - 1].diagonal - 1];
    numerator.add_term(e, 1);
    auto labels = path_labels(g, m);
    out.terms.push_back({std::move(m), std::move(labels), std::move(e)});
  }
  out.laurent = numerator.divide_by_x_monomial(out.denominator);
  return out;
}

inline Expansion expand_via_subgraphs(const Triangulation& t, const ArcSpec& a) {
  return expand_via_subgraphs(build_snake(t, a));
}

/// F-polynomial: the expansion with every x set to 1.
inline LaurentPoly f_polynomial(const SnakeGraph& g) { return expand(g).laurent.substitute_x_ones(); }
inline LaurentPoly f_polynomial(const Triangulation& t, const ArcSpec& a) { return f_polynomial(build_snake(t, a)); }

/// F-polynomial read directly off the tile subsets, without building matchings.
inline LaurentPoly f_polynomial_via_subgraphs(const SnakeGraph& g) {
  return expand_via_subgraphs(g).laurent.substitute_x_ones();
}

/// Degree of w(M₋) over the crossing monomial.
inline std::vector<long> g_vector(const SnakeGraph& g) {
  const ExpVector w = weight(g, boundary_matchings(g).minus);
  const auto d = crossing_exponents(g.n, g.crossings);
  std::vector<long> out(g.n);
  for (std::size_t i = 0; i < g.n; ++i) out[i] = static_cast<long>(w.xexp[i]) - d[i];
  return out;
}

/// g-vector, cross-checked against the common degree of all terms under B_T.
inline std::vector<long> g_vector(const Triangulation& t, const ArcSpec& a) {
  const SnakeGraph g = build_snake(t, a);
  const auto gv = g_vector(g);
  const auto deg = multidegree(expand(g).laurent, b_matrix(t));
  if (!deg) throw InternalError("expansion is not homogeneous");
  if (*deg != gv) throw InternalError("g-vector differs from the degree of the expansion");
  return gv;
}

struct ExchangeCheck {
  bool ok = false;
  LaurentPoly lhs;  // x_k x_k'
  LaurentPoly rhs;  // x_ρ1 x_ρ2 y⁺ + x_σ1 x_σ2 y⁻
};

/// Expansion of the diagonal that replaces τ_k, as the one-crossing arc over τ_k.
inline LaurentPoly flipped_variable(const Triangulation& t, int k) {
  const Quadrilateral q = quadrilateral(t, k);
  return expand(t, ArcSpec{{k}, q.first_triangle}).laurent;
}

/// Checks x_k x_k' = x_ρ1 x_ρ2 y⁺ + x_σ1 x_σ2 y⁻ in the initial seed, with y⁺ and
/// y⁻ the tropical parts of the k-th coefficient and boundary arcs set to 1.
inline ExchangeCheck exchange_check(const Triangulation& t, int k) {
  require_valid(t);
  const Quadrilateral q = quadrilateral(t, k);
  const std::size_t n = static_cast<std::size_t>(t.n);
  auto var = [&](int label) { return t.is_interior(label) ? LaurentPoly::x(n, label) : LaurentPoly::one(n); };
  const auto [plus, minus] = coefficient_parts(initial_seed(t), static_cast<std::size_t>(k));
  ExchangeCheck c;
  c.lhs = LaurentPoly::x(n, k) * flipped_variable(t, k);
  c.rhs = var(q.rho1) * var(q.rho2) * plus + var(q.sigma1) * var(q.sigma2) * minus;
  c.ok = c.lhs == c.rhs;
  return c;
}

}  // namespace snakes
