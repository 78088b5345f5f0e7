#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primal/errors.hpp"
#include "primal/rational.hpp"

namespace primal {

// Dense univariate polynomial over the rationals.  Coefficient i belongs
// to the i-th power of the variable; the zero polynomial is the empty
// coefficient list, otherwise the top coefficient is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(Rational c0) {
    if (!c0.is_zero()) c_.push_back(std::move(c0));
  }
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly one() { return UniPoly(Rational(1)); }
  static UniPoly monomial(std::size_t deg, Rational coef) {
    UniPoly f;
    if (!coef.is_zero()) {
      f.c_.assign(deg + 1, Rational());
      f.c_[deg] = std::move(coef);
    }
    return f;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_unit() const { return c_.size() == 1; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::optional<long> valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) return static_cast<long>(i);
    return std::nullopt;
  }
  Rational coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Rational();
  }
  Rational leading() const {
    return c_.empty() ? Rational() : c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] = out[i] + o.c_[i];
    return UniPoly(std::move(out));
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator-() const {
    std::vector<Rational> out = c_;
    for (auto& r : out) r = -r;
    return UniPoly(std::move(out));
  }
  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        out[i + j] = out[i + j] + c_[i] * o.c_[j];
    }
    return UniPoly(std::move(out));
  }
  UniPoly scaled(const Rational& r) const {
    if (r.is_zero()) return UniPoly();
    std::vector<Rational> out = c_;
    for (auto& x : out) x = x * r;
    return UniPoly(std::move(out));
  }
  UniPoly monic() const {
    return c_.empty() ? UniPoly() : scaled(c_.back().inverse());
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  std::string str(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      Rational a = c_[k];
      if (out.empty()) {
        if (a.sign() < 0) {
          out += "-";
          a = -a;
        }
      } else {
        out += a.sign() < 0 ? " - " : " + ";
        if (a.sign() < 0) a = -a;
      }
      bool unit_coef = a.is_one() && k > 0;
      if (!unit_coef) out += a.str();
      if (k > 0) {
        if (!unit_coef) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
      }
    }
    return out;
  }

 private:
  std::vector<Rational> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

inline std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error("univariate division by zero");
  std::vector<Rational> rem(static_cast<std::size_t>(a.degree() + 1));
  for (long i = 0; i <= a.degree(); ++i) rem[i] = a.coeff(i);
  std::vector<Rational> quo;
  long db = b.degree();
  Rational lb = b.leading();
  long dr = a.degree();
  while (dr >= db) {
    while (dr >= 0 && rem[dr].is_zero()) --dr;
    if (dr < db) break;
    Rational q = rem[dr] / lb;
    std::size_t shift = static_cast<std::size_t>(dr - db);
    if (quo.size() < shift + 1) quo.resize(shift + 1, Rational());
    quo[shift] = q;
    for (long i = 0; i <= db; ++i)
      rem[shift + i] = rem[shift + i] - q * b.coeff(i);
    --dr;
  }
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = uni_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

using UniMat = std::vector<std::vector<UniPoly>>;

inline UniMat uni_identity(std::size_t n) {
  UniMat m(n, std::vector<UniPoly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = UniPoly::one();
  return m;
}

inline UniMat uni_mat_mul(const UniMat& a, const UniMat& b) {
  std::size_t r = a.size(), mid = b.size(), c = mid ? b[0].size() : 0;
  UniMat out(r, std::vector<UniPoly>(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < mid; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < c; ++j)
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

namespace detail {

inline UniPoly uni_det(const UniMat& m) {
  std::size_t n = m.size();
  if (n == 0) return UniPoly::one();
  if (n == 1) return m[0][0];
  UniPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    UniMat minor(n - 1, std::vector<UniPoly>(n - 1));
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        minor[i - 1][cc++] = m[i][k];
      }
    }
    UniPoly term = m[0][j] * uni_det(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace detail

// Smith normal form over the univariate polynomial ring: U * A * V = D
// with U, V unimodular and D diagonal, monic entries, each dividing the
// next.  The factorization is re-multiplied and compared with A exactly,
// and both transform determinants are checked to be nonzero constants.
struct SmithForm {
  UniMat d;
  UniMat u;
  UniMat v;
  std::vector<UniPoly> diagonal;  // min(rows, cols) entries, zeros included
};

inline SmithForm smith_normal_form(const UniMat& input) {
  std::size_t rows = input.size();
  std::size_t cols = rows ? input[0].size() : 0;
  for (const auto& row : input)
    if (row.size() != cols) throw Error("ragged matrix");
  UniMat a = input;
  UniMat u = uni_identity(rows);
  UniMat v = uni_identity(cols);

  auto row_op = [&](std::size_t dst, std::size_t src, const UniPoly& q) {
    for (std::size_t j = 0; j < cols; ++j) a[dst][j] = a[dst][j] - q * a[src][j];
    for (std::size_t j = 0; j < rows; ++j) u[dst][j] = u[dst][j] - q * u[src][j];
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const UniPoly& q) {
    for (std::size_t i = 0; i < rows; ++i) a[i][dst] = a[i][dst] - q * a[i][src];
    for (std::size_t i = 0; i < cols; ++i) v[i][dst] = v[i][dst] - q * v[i][src];
  };
  auto row_swap = [&](std::size_t i1, std::size_t i2) {
    if (i1 == i2) return;
    std::swap(a[i1], a[i2]);
    std::swap(u[i1], u[i2]);
  };
  auto col_swap = [&](std::size_t j1, std::size_t j2) {
    if (j1 == j2) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(a[i][j1], a[i][j2]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(v[i][j1], v[i][j2]);
  };

  std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      long best = -1;
      std::size_t bi = k, bj = k;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (!a[i][j].is_zero() && (best < 0 || a[i][j].degree() < best)) {
            best = a[i][j].degree();
            bi = i;
            bj = j;
          }
      if (best < 0) break;
      row_swap(k, bi);
      col_swap(k, bj);

      bool dirty = false;
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (a[i][k].is_zero()) continue;
        auto [q, r] = uni_divmod(a[i][k], a[k][k]);
        row_op(i, k, q);
        if (!r.is_zero()) dirty = true;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (a[k][j].is_zero()) continue;
        auto [q, r] = uni_divmod(a[k][j], a[k][k]);
        col_op(j, k, q);
        if (!r.is_zero()) dirty = true;
      }
      if (dirty) continue;

      // Pivot must divide the rest of the submatrix for the chain.
      bool chained = true;
      for (std::size_t i = k + 1; i < rows && chained; ++i)
        for (std::size_t j = k + 1; j < cols && chained; ++j)
          if (!a[i][j].is_zero() &&
              !uni_divmod(a[i][j], a[k][k]).second.is_zero()) {
            row_op(k, i, -UniPoly::one());
            chained = false;
          }
      if (chained) break;
    }
  }

  // Monic normalization by unit row scaling.
  for (std::size_t k = 0; k < steps; ++k) {
    if (a[k][k].is_zero() || a[k][k].is_monic()) continue;
    Rational s = a[k][k].leading().inverse();
    for (std::size_t j = 0; j < cols; ++j) a[k][j] = a[k][j].scaled(s);
    for (std::size_t j = 0; j < rows; ++j) u[k][j] = u[k][j].scaled(s);
  }

  SmithForm sf{a, u, v, {}};
  for (std::size_t k = 0; k < steps; ++k) sf.diagonal.push_back(a[k][k]);

  // Audits: diagonal shape, divisibility chain, exact re-multiplication,
  // unimodular transforms.
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (i != j && !a[i][j].is_zero())
        throw CheckError("Smith form is not diagonal");
  for (std::size_t k = 0; k + 1 < sf.diagonal.size(); ++k) {
    if (sf.diagonal[k].is_zero() && !sf.diagonal[k + 1].is_zero())
      throw CheckError("Smith form has a zero before a nonzero entry");
    if (!sf.diagonal[k].is_zero() && !sf.diagonal[k + 1].is_zero() &&
        !uni_divmod(sf.diagonal[k + 1], sf.diagonal[k]).second.is_zero())
      throw CheckError("Smith form divisibility chain broken");
  }
  if (uni_mat_mul(uni_mat_mul(u, input), v) != a)
    throw CheckError("Smith form re-multiplication mismatch");
  if (rows <= 8) {
    UniPoly du = detail::uni_det(u);
    if (du.is_zero() || du.degree() != 0)
      throw CheckError("row transform is not unimodular");
  }
  if (cols <= 8) {
    UniPoly dv = detail::uni_det(v);
    if (dv.is_zero() || dv.degree() != 0)
      throw CheckError("column transform is not unimodular");
  }
  return sf;
}

}  // namespace primal
