#pragma once

#include <vector>

#include "primal/polynomial.hpp"

namespace primal {

// Dense matrix of polynomials.  Only small matrices appear in this library
// (Jacobians and presentation matrices), so determinants are computed by
// cofactor expansion.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        data_(rows * cols, Polynomial(ring_)) {}

  static PolyMatrix from_rows(RingPtr ring, std::vector<std::vector<Polynomial>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    PolyMatrix m(std::move(ring), r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw Error("ragged matrix");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
    }
    return m;
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial& at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw IndexError("matrix index out of range");
    return data_[i * cols_ + j];
  }
  const Polynomial& at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw IndexError("matrix index out of range");
    return data_[i * cols_ + j];
  }

  PolyMatrix transpose() const {
    PolyMatrix m(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  Polynomial det() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    std::vector<std::size_t> rs(rows_), cs(cols_);
    for (std::size_t i = 0; i < rows_; ++i) rs[i] = i;
    for (std::size_t j = 0; j < cols_; ++j) cs[j] = j;
    return det_rec(rs, cs);
  }

  // All k x k minor determinants, rows and columns chosen in lexicographic
  // combination order (row choice outer).  k = 0 yields the single empty
  // determinant 1.
  std::vector<Polynomial> minors(std::size_t k) const {
    std::vector<Polynomial> out;
    if (k == 0) {
      out.push_back(Polynomial::one(ring_));
      return out;
    }
    if (k > rows_ || k > cols_) return out;
    auto row_sets = combinations(rows_, k);
    auto col_sets = combinations(cols_, k);
    for (const auto& rs : row_sets)
      for (const auto& cs : col_sets) out.push_back(det_rec(rs, cs));
    return out;
  }

 private:
  static std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(k);
    for (std::size_t i = 0; i < k; ++i) cur[i] = i;
    while (true) {
      out.push_back(cur);
      std::size_t i = k;
      while (i-- > 0) {
        if (cur[i] + (k - i) < n) {
          ++cur[i];
          for (std::size_t j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
          break;
        }
        if (i == 0) return out;
      }
    }
  }

  Polynomial det_rec(const std::vector<std::size_t>& rs,
                     const std::vector<std::size_t>& cs) const {
    std::size_t n = rs.size();
    if (n == 0) return Polynomial::one(ring_);
    if (n == 1) return at(rs[0], cs[0]);
    Polynomial acc(ring_);
    std::vector<std::size_t> sub_rows(rs.begin() + 1, rs.end());
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial& pivot = at(rs[0], cs[j]);
      if (pivot.is_zero()) continue;
      std::vector<std::size_t> sub_cols;
      for (std::size_t t = 0; t < n; ++t)
        if (t != j) sub_cols.push_back(cs[t]);
      Polynomial term = pivot * det_rec(sub_rows, sub_cols);
      if (j % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    return acc;
  }

  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> data_;
};

}  // namespace primal
