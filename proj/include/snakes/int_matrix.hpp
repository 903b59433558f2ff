#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "snakes/error.hpp"

namespace snakes {

/// Dense row-major integer matrix. Indices are 0-based; callers working with
/// 1-based arc labels subtract one at the boundary.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  long& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  long operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  IntMatrix operator-() const {
    IntMatrix t = *this;
    for (auto& v : t.data_) v = -v;
    return t;
  }

  bool is_skew_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) != -(*this)(c, r)) return false;
    return true;
  }

  std::vector<long> column(std::size_t c) const {
    std::vector<long> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << '[';
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
      os << "]\n";
    }
    return os;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<long> data_;
};

/// Matrix mutation in direction k (0-based) of a square or extended exchange
/// matrix: b'_ij = -b_ij if i = k or j = k, else b_ij + sgn(b_ik) [b_ik b_kj]_+.
/// Rows beyond the square part (coefficient rows) follow the same rule.
inline IntMatrix mutate_matrix(const IntMatrix& b, std::size_t k) {
  if (k >= b.cols() || k >= b.rows()) throw LabelError("mutation direction out of range");
  IntMatrix out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -b(i, j);
        continue;
      }
      const long bik = b(i, k);
      const long bkj = b(k, j);
      const long prod = bik * bkj;
      const long sign = (bik > 0) - (bik < 0);
      out(i, j) = b(i, j) + (prod > 0 ? sign * prod : 0);
    }
  }
  return out;
}

}  // namespace snakes
