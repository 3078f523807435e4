#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "asq/rational.hpp"

namespace asq {

// Dense exact-rational matrix. Row reduction is exact; rank() runs
// fraction-free (Bareiss) elimination on integer-cleared rows to bound
// intermediate entry growth.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, std::vector<Rational>(cols, Rational(0))) {}

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i][i] = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return data_[i][j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return data_[i][j]; }

  std::vector<Rational>& row(std::size_t i) { return data_[i]; }
  const std::vector<Rational>& row(std::size_t i) const { return data_[i]; }

  void append_row(std::vector<Rational> r) {
    data_.push_back(std::move(r));
    rows_ = data_.size();
    if (cols_ == 0 && rows_ > 0) cols_ = data_[0].size();
  }

  std::size_t rank() const {
    // Clear denominators row by row, then Bareiss over integers.
    std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_));
    for (std::size_t i = 0; i < rows_; ++i) {
      Integer lcm = 1;
      for (std::size_t j = 0; j < cols_; ++j) {
        Integer den = data_[i][j].get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      }
      for (std::size_t j = 0; j < cols_; ++j) {
        Rational scaled = data_[i][j] * Rational(lcm);
        scaled.canonicalize();
        m[i][j] = scaled.get_num();
      }
    }
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && m[piv][c] == 0) ++piv;
      if (piv == rows_) continue;
      std::swap(m[piv], m[r]);
      for (std::size_t i = r + 1; i < rows_; ++i) {
        for (std::size_t j = c + 1; j < cols_; ++j) {
          m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
        }
        m[i][c] = 0;
      }
      prev = m[r][c];
      ++r;
    }
    return r;
  }

  // In-place reduced row echelon form; returns pivot column per pivot row.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && data_[piv][c] == 0) ++piv;
      if (piv == rows_) continue;
      std::swap(data_[piv], data_[r]);
      Rational inv = 1 / data_[r][c];
      for (std::size_t j = c; j < cols_; ++j) data_[r][j] *= inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r || data_[i][c] == 0) continue;
        Rational f = data_[i][c];
        for (std::size_t j = c; j < cols_; ++j) data_[i][j] -= f * data_[r][j];
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  // Basis of { x : A x = 0 }, one column vector per free column.
  std::vector<std::vector<Rational>> nullspace() const {
    RatMatrix m = *this;
    std::vector<std::size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Rational> x(cols_, Rational(0));
      x[free] = 1;
      for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = -m.at(pr, free);
      basis.push_back(std::move(x));
    }
    return basis;
  }

  // One solution of A x = b, if consistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const {
    RatMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = data_[i][j];
      aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref();
    for (std::size_t c : pivots) {
      if (c == cols_) return std::nullopt;  // pivot in augmented column
    }
    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(pr, cols_);
    return x;
  }

  bool invertible() const { return rows_ == cols_ && rank() == rows_; }

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<Rational>> data_;
};

}  // namespace asq
