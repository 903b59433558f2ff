#pragma once

// Sparse Laurent polynomials in x_1..x_n (any integer exponent) with
// polynomial coefficients in y_1..y_n (nonnegative exponents) over Z.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "snakes/error.hpp"
#include "snakes/int_matrix.hpp"

namespace snakes {

using Integer = boost::multiprecision::cpp_int;

/// Exponent vector of a single monomial x^xexp y^yexp.
struct ExpVector {
  std::vector<int> xexp;
  std::vector<int> yexp;

  ExpVector() = default;
  explicit ExpVector(std::size_t n) : xexp(n, 0), yexp(n, 0) {}
  ExpVector(std::vector<int> x, std::vector<int> y) : xexp(std::move(x)), yexp(std::move(y)) {
    if (xexp.size() != yexp.size()) throw DimensionError("x and y exponent vectors differ in length");
    for (int e : yexp)
      if (e < 0) throw DimensionError("negative y exponent");
  }

  std::size_t nvars() const noexcept { return xexp.size(); }

  bool is_one() const {
    return std::all_of(xexp.begin(), xexp.end(), [](int e) { return e == 0; }) &&
           std::all_of(yexp.begin(), yexp.end(), [](int e) { return e == 0; });
  }

  // Canonical term order: lexicographic on xexp, then on yexp.
  friend auto operator<=>(const ExpVector&, const ExpVector&) = default;
  friend bool operator==(const ExpVector&, const ExpVector&) = default;
};

inline ExpVector operator*(const ExpVector& a, const ExpVector& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("monomials with different numbers of variables");
  ExpVector out(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    out.xexp[i] = a.xexp[i] + b.xexp[i];
    out.yexp[i] = a.yexp[i] + b.yexp[i];
  }
  return out;
}

class LaurentPoly {
 public:
  using TermMap = std::map<ExpVector, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

  static LaurentPoly zero(std::size_t n) { return LaurentPoly(n); }

  static LaurentPoly constant(std::size_t n, const Integer& c) {
    LaurentPoly p(n);
    if (c != 0) p.terms_.emplace(ExpVector(n), c);
    return p;
  }

  static LaurentPoly one(std::size_t n) { return constant(n, 1); }

  static LaurentPoly monomial(const ExpVector& e, const Integer& c = 1) {
    LaurentPoly p(e.nvars());
    if (c != 0) p.terms_.emplace(e, c);
    return p;
  }

  /// The generator x_i, 1-based.
  static LaurentPoly x(std::size_t n, std::size_t i, int power = 1) {
    ExpVector e(n);
    e.xexp.at(i - 1) = power;
    return monomial(e);
  }

  /// The generator y_i, 1-based.
  static LaurentPoly y(std::size_t n, std::size_t i, int power = 1) {
    ExpVector e(n);
    e.yexp.at(i - 1) = power;
    return monomial(e);
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Integer coefficient(const ExpVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Adds c * x^e in place, dropping the term if it cancels.
  void add_term(const ExpVector& e, const Integer& c) {
    if (e.nvars() != nvars_) throw DimensionError("term has wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& q) {
    check_same(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& q) {
    check_same(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }

  LaurentPoly operator-() const {
    LaurentPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    p.check_same(q);
    LaurentPoly out(p.nvars_);
    for (const auto& [ep, cp] : p.terms_)
      for (const auto& [eq, cq] : q.terms_) out.add_term(ep * eq, cp * cq);
    return out;
  }

  LaurentPoly& operator*=(const LaurentPoly& q) { return *this = *this * q; }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Divides every term by x_1^{d_1} ... x_n^{d_n}; always exact in the Laurent ring.
  LaurentPoly divide_by_x_monomial(const std::vector<int>& d) const {
    if (d.size() != nvars_) throw DimensionError("denominator exponent vector has wrong length");
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      ExpVector shifted = e;
      for (std::size_t i = 0; i < nvars_; ++i) shifted.xexp[i] -= d[i];
      out.terms_.emplace(std::move(shifted), c);
    }
    return out;
  }

  /// Sets every x_i to 1 and merges like terms in y.
  LaurentPoly substitute_x_ones() const {
    LaurentPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
      ExpVector ye(std::vector<int>(nvars_, 0), e.yexp);
      out.add_term(ye, c);
    }
    return out;
  }

  /// Sum of all coefficients, i.e. the value at x = y = 1.
  Integer evaluate_at_ones() const {
    Integer s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
  }

  std::string to_string() const;

 private:
  void check_same(const LaurentPoly& q) const {
    if (nvars_ != q.nvars_)
      throw DimensionError("polynomials in " + std::to_string(nvars_) + " and " +
                           std::to_string(q.nvars_) + " variables");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

inline std::string render_monomial(const ExpVector& e) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char var, std::size_t i, int power) {
    if (power == 0) return;
    if (!first) os << '*';
    first = false;
    os << var << (i + 1);
    if (power != 1) os << '^' << power;
  };
  for (std::size_t i = 0; i < e.nvars(); ++i) emit('x', i, e.xexp[i]);
  for (std::size_t i = 0; i < e.nvars(); ++i) emit('y', i, e.yexp[i]);
  return first ? std::string("1") : os.str();
}

/// Canonical text: terms in ascending canonical order joined by " + " / " - ",
/// unit coefficients suppressed, e.g. `x1^-1 + x1^-1*y1`.
inline std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const bool unit = e.is_one();
    if (mag != 1 || unit) {
      os << mag;
      if (!unit) os << '*';
    }
    if (!unit) os << render_monomial(e);
  }
  return os.str();
}

/// Degree of every term under deg(x_i) = e_i, deg(y_j) = B e_j. Returns
/// std::nullopt when terms disagree (heterogeneous) or the polynomial is zero.
inline std::optional<std::vector<long>> multidegree(const LaurentPoly& p, const IntMatrix& b) {
  const std::size_t n = p.nvars();
  if (b.rows() != n || b.cols() != n) throw DimensionError("grading matrix does not match variable count");
  std::optional<std::vector<long>> common;
  for (const auto& [e, c] : p.terms()) {
    std::vector<long> deg(n, 0);
    for (std::size_t i = 0; i < n; ++i) deg[i] += e.xexp[i];
    for (std::size_t j = 0; j < n; ++j)
      if (e.yexp[j] != 0)
        for (std::size_t i = 0; i < n; ++i) deg[i] += static_cast<long>(e.yexp[j]) * b(i, j);
    if (!common)
      common = std::move(deg);
    else if (*common != deg)
      return std::nullopt;
  }
  return common;
}

/// Exact quotient p / q in Z[x^{±1}, y], or std::nullopt when q does not divide p.
///
/// Both sides are shifted to honest polynomials, q with its monomial content
/// removed, then divided by leading terms in the canonical (lex) order, which
/// is a well-order on nonnegative exponents.
inline std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.nvars() != q.nvars()) throw DimensionError("exact_divide: variable counts differ");
  if (q.is_zero()) throw DimensionError("division by the zero polynomial");
  const std::size_t n = p.nvars();
  if (p.is_zero()) return LaurentPoly(n);

  ExpVector qmin = q.terms().begin()->first;
  for (const auto& [e, c] : q.terms())
    for (std::size_t i = 0; i < n; ++i) {
      qmin.xexp[i] = std::min(qmin.xexp[i], e.xexp[i]);
      qmin.yexp[i] = std::min(qmin.yexp[i], e.yexp[i]);
    }
  std::vector<int> pshift(n, 0);
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < n; ++i) pshift[i] = std::max(pshift[i], -e.xexp[i]);

  LaurentPoly divisor(n);
  for (const auto& [e, c] : q.terms()) {
    ExpVector s = e;
    for (std::size_t i = 0; i < n; ++i) {
      s.xexp[i] -= qmin.xexp[i];
      s.yexp[i] -= qmin.yexp[i];
    }
    divisor.add_term(s, c);
  }
  LaurentPoly rest(n);
  for (const auto& [e, c] : p.terms()) {
    ExpVector s = e;
    for (std::size_t i = 0; i < n; ++i) s.xexp[i] += pshift[i];
    rest.add_term(s, c);
  }

  const auto& [lead_e, lead_c] = *divisor.terms().rbegin();
  LaurentPoly quotient(n);
  while (!rest.is_zero()) {
    const auto [re, rc] = *rest.terms().rbegin();
    ExpVector qe(n);
    for (std::size_t i = 0; i < n; ++i) {
      qe.xexp[i] = re.xexp[i] - lead_e.xexp[i];
      qe.yexp[i] = re.yexp[i] - lead_e.yexp[i];
      if (qe.xexp[i] < 0 || qe.yexp[i] < 0) return std::nullopt;
    }
    if (rc % lead_c != 0) return std::nullopt;
    const LaurentPoly step = LaurentPoly::monomial(qe, rc / lead_c);
    quotient += step;
    rest -= step * divisor;
  }

  LaurentPoly out(n);
  for (const auto& [e, c] : quotient.terms()) {
    ExpVector s = e;
    for (std::size_t i = 0; i < n; ++i) {
      s.xexp[i] -= pshift[i] + qmin.xexp[i];
      s.yexp[i] -= qmin.yexp[i];
      if (s.yexp[i] < 0) return std::nullopt;
    }
    out.add_term(s, c);
  }
  return out;
}

}  // namespace snakes
