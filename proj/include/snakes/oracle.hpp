#pragma once

// Seed mutation with principal coefficients, and a flip search that turns an
// arc into a cluster variable of some seed. Independent of the snake graphs.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "snakes/error.hpp"
#include "snakes/int_matrix.hpp"
#include "snakes/poly.hpp"
#include "snakes/surface.hpp"

namespace snakes {

/// Cluster, exchange matrix and coefficients. Column k of `c` holds the
/// exponents of y_1..y_n in the tropical coefficient attached to slot k.
struct Seed {
  IntMatrix b;
  std::vector<LaurentPoly> cluster;
  IntMatrix c;

  std::size_t rank() const noexcept { return cluster.size(); }
};

inline Seed initial_seed(const IntMatrix& b) {
  if (!b.is_skew_symmetric()) throw DimensionError("exchange matrix must be square and skew-symmetric");
  const std::size_t n = b.rows();
  Seed s{b, {}, IntMatrix::identity(n)};
  for (std::size_t i = 1; i <= n; ++i) s.cluster.push_back(LaurentPoly::x(n, i));
  return s;
}

inline Seed initial_seed(const Triangulation& t) { return initial_seed(b_matrix(t)); }

/// Tropical parts y⁺ = ∏ y_j^[c_jk]₊ and y⁻ = ∏ y_j^[-c_jk]₊ of the coefficient at slot k (1-based).
inline std::pair<LaurentPoly, LaurentPoly> coefficient_parts(const Seed& s, std::size_t k) {
  const std::size_t n = s.rank();
  ExpVector plus(n), minus(n);
  for (std::size_t j = 0; j < n; ++j) {
    const long e = s.c(j, k - 1);
    if (e > 0) plus.yexp[j] = static_cast<int>(e);
    if (e < 0) minus.yexp[j] = static_cast<int>(-e);
  }
  return {LaurentPoly::monomial(plus), LaurentPoly::monomial(minus)};
}

/// Mutation in direction k (1-based):
///   x_k' = (y⁺ ∏_{b_ki>0} x_i^{b_ki} + y⁻ ∏_{b_ki<0} x_i^{-b_ki}) / x_k.
/// The coefficient rows mutate together with the exchange matrix written in
/// column convention, i.e. the transpose of b.
inline Seed mutate(const Seed& s, std::size_t k) {
  const std::size_t n = s.rank();
  if (k < 1 || k > n) throw LabelError("mutation direction " + std::to_string(k) + " out of range");
  auto [plus, minus] = coefficient_parts(s, k);
  LaurentPoly p = plus, q = minus;
  for (std::size_t i = 0; i < n; ++i) {
    const long e = s.b(k - 1, i);
    for (long r = 0; r < e; ++r) p *= s.cluster[i];
    for (long r = 0; r < -e; ++r) q *= s.cluster[i];
  }
  auto quotient = exact_divide(p + q, s.cluster[k - 1]);
  if (!quotient) throw InternalError("exchange polynomial is not divisible by x_" + std::to_string(k));

  IntMatrix ext(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ext(i, j) = s.b(j, i);
      ext(n + i, j) = s.c(i, j);
    }
  const IntMatrix mutated = mutate_matrix(ext, k - 1);
  Seed out{IntMatrix(n, n), s.cluster, IntMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.b(j, i) = mutated(i, j);
      out.c(i, j) = mutated(n + i, j);
    }
  out.cluster[k - 1] = std::move(*quotient);
  return out;
}

/// An arc either still crossing the triangulation, or equal to one of its arcs.
using ArcOrLabel = std::variant<ArcSpec, int>;

namespace detail {

// Positions where a stretch of the walk inside the flipped quadrilateral begins
// or ends. Old triangles: A = (k, a, b) with corners R, P, Q opposite k, a, b;
// B = (k, c, d) with corners S, Q, P opposite k, c, d. New triangles:
// A' = (k', b, c) on corners R, P, S and B' = (k', d, a) on corners S, Q, R.
enum NewSide : unsigned { InAPrime = 1, InBPrime = 2 };

inline unsigned new_triangles_of_side(bool in_first, bool first_side) {
  // A: a -> B', b -> A'.  B: c -> A', d -> B'.
  if (in_first) return first_side ? InBPrime : InAPrime;
  return first_side ? InAPrime : InBPrime;
}

inline unsigned new_triangles_of_corner(bool in_first, std::size_t opposite_slot) {
  // opposite_slot: 0 = opposite k, 1 = opposite a (or c), 2 = opposite b (or d).
  if (opposite_slot == 0) return InAPrime | InBPrime;
  if (in_first) return opposite_slot == 1 ? InAPrime : InBPrime;
  return opposite_slot == 1 ? InBPrime : InAPrime;
}

}  // namespace detail

/// Crossing sequence of the same arc after `t` is flipped at q.diagonal.
/// Each stretch of the walk inside the quadrilateral is rerouted: it crosses
/// the new diagonal exactly when its entry and exit lie in different new
/// triangles. Returns the label when the arc becomes the new diagonal.
inline ArcOrLabel transport_arcspec(const Triangulation& t, const ArcSpec& a, const Quadrilateral& q) {
  const ArcWalk w = connecting_arcs(t, a);
  const int k = q.diagonal;
  const std::size_t d = a.crossings.size();
  const Triangle ta = rotate_to(t.triangles[q.first_triangle], k);
  const Triangle tb = rotate_to(t.triangles[q.second_triangle], k);
  auto in_quad = [&](std::size_t tri) { return tri == q.first_triangle || tri == q.second_triangle; };
  auto slot_of = [&](std::size_t tri, int label) -> std::size_t {
    const Triangle& r = tri == q.first_triangle ? ta : tb;
    for (std::size_t s = 0; s < 3; ++s)
      if (r[s] == label) return s;
    throw ArcError(0, "label not on the quadrilateral");
  };
  // Walk position j sits in triangle w.triangles[j]; crossing j (1-based) lies between j-1 and j.
  auto side_pos = [&](std::size_t j, int label) {
    const std::size_t tri = w.triangles[j];
    const std::size_t s = slot_of(tri, label);
    if (s == 0) throw ArcError(j, "unexpected crossing of the flipped diagonal");
    return detail::new_triangles_of_side(tri == q.first_triangle, s == 1);
  };
  auto corner_pos = [&](std::size_t j, int opposite) {
    const std::size_t tri = w.triangles[j];
    return detail::new_triangles_of_corner(tri == q.first_triangle, slot_of(tri, opposite));
  };

  std::vector<int> out;
  std::optional<std::size_t> start;
  std::size_t j = 0;
  while (j <= d) {
    if (!in_quad(w.triangles[j])) {
      if (j == 0) start = a.start_triangle;
      if (j < d) out.push_back(a.crossings[j]);
      ++j;
      continue;
    }
    std::size_t last = j;
    if (last < d && a.crossings[last] == k) ++last;
    const unsigned entry = j == 0 ? corner_pos(0, a.crossings[0]) : side_pos(j, a.crossings[j - 1]);
    const unsigned exit = last == d ? corner_pos(d, a.crossings[d - 1]) : side_pos(last, a.crossings[last]);
    const unsigned both = entry & exit;
    if (j == 0 && last == d && entry == (detail::InAPrime | detail::InBPrime) && entry == exit) return k;
    if (j == 0) {
      const unsigned where = both ? both : entry;
      start = (where & detail::InAPrime) ? q.first_triangle : q.second_triangle;
    }
    if (!both) out.push_back(k);
    if (last < d) out.push_back(a.crossings[last]);
    j = last + 1;
  }

  // A crossing immediately undone leaves the walk in the triangle it started from.
  std::vector<int> reduced;
  for (int label : out) {
    if (!reduced.empty() && reduced.back() == label)
      reduced.pop_back();
    else
      reduced.push_back(label);
  }
  if (reduced.empty()) throw ArcError(0, "arc collapsed to an arc of the triangulation without a label");
  return ArcSpec{std::move(reduced), *start};
}

struct FlipSearchResult {
  std::vector<int> flips;
  int label = 0;  // the arc's label in the final triangulation
};

namespace detail {

using SearchKey = std::tuple<std::vector<Triangle>, std::vector<int>, Triangle>;

inline SearchKey search_key(const Triangulation& t, const ArcSpec& a) {
  return {canonical_triangles(t), a.crossings, t.triangles[a.start_triangle]};
}

struct FlipSearch {
  std::map<SearchKey, int> seen;  // largest remaining budget already explored
  std::vector<int> path;
  int label = 0;

  bool run(const Triangulation& t, const ArcSpec& a, int budget) {
    if (budget == 0) return false;
    auto [it, inserted] = seen.emplace(search_key(t, a), budget);
    if (!inserted) {
      if (it->second >= budget) return false;
      it->second = budget;
    }
    struct Move {
      std::size_t cost;
      int k;
      Triangulation next;
      ArcOrLabel arc;
    };
    std::vector<Move> moves;
    for (int k = 1; k <= t.n; ++k) {
      auto [next, quad] = flip(t, k);
      ArcOrLabel moved = transport_arcspec(t, a, quad);
      const std::size_t cost = std::holds_alternative<int>(moved) ? 0 : std::get<ArcSpec>(moved).length();
      moves.push_back({cost, k, std::move(next), std::move(moved)});
    }
    std::stable_sort(moves.begin(), moves.end(), [](const Move& x, const Move& y) { return x.cost < y.cost; });
    for (const Move& mv : moves) {
      path.push_back(mv.k);
      if (std::holds_alternative<int>(mv.arc)) {
        label = std::get<int>(mv.arc);
        return true;
      }
      if (run(mv.next, std::get<ArcSpec>(mv.arc), budget - 1)) return true;
      path.pop_back();
    }
    return false;
  }
};

}  // namespace detail

/// Shortest-first search (iterative deepening) for flips after which the arc
/// is an arc of the triangulation. Flipping the first crossed arc always
/// removes at least one crossing, so a sequence of length at most d exists.
inline std::optional<FlipSearchResult> find_flip_sequence(const Triangulation& t, const ArcOrLabel& arc,
                                                          int max_depth) {
  require_valid(t);
  if (max_depth < 0) throw DimensionError("max_depth must be nonnegative");
  if (const int* label = std::get_if<int>(&arc)) {
    if (!t.is_interior(*label)) throw LabelError("arc " + std::to_string(*label) + " is not interior");
    return FlipSearchResult{{}, *label};
  }
  const ArcSpec& a = std::get<ArcSpec>(arc);
  connecting_arcs(t, a);
  for (int depth = 1; depth <= max_depth; ++depth) {
    detail::FlipSearch search;
    if (search.run(t, a, depth)) return FlipSearchResult{search.path, search.label};
  }
  return std::nullopt;
}

inline int default_max_depth(const ArcOrLabel& arc) {
  if (const ArcSpec* a = std::get_if<ArcSpec>(&arc)) return static_cast<int>(a->length()) + 4;
  return 0;
}

/// Cluster variable of the arc, by mutating the initial seed along a flip
/// sequence. Checks at every step that the exchange matrix of the flipped
/// triangulation agrees with the mutated one.
inline LaurentPoly oracle_expand(const Triangulation& t, const ArcOrLabel& arc, int max_depth) {
  auto found = find_flip_sequence(t, arc, max_depth);
  if (!found) throw NotFoundError("no flip sequence within depth " + std::to_string(max_depth));
  Seed seed = initial_seed(t);
  Triangulation cur = t;
  for (int k : found->flips) {
    seed = mutate(seed, static_cast<std::size_t>(k));
    cur = flip(cur, k).first;
    if (b_matrix(cur) != seed.b) throw InternalError("flip and matrix mutation disagree");
  }
  return seed.cluster[static_cast<std::size_t>(found->label - 1)];
}

inline LaurentPoly oracle_expand(const Triangulation& t, const ArcOrLabel& arc) {
  return oracle_expand(t, arc, default_max_depth(arc));
}

}  // namespace snakes
