#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "primal/errors.hpp"
#include "primal/ring.hpp"

namespace primal {

// Exponent vector of fixed length.  The operator<=> below is a structural
// (container) comparison used for map keys only; term orders live in
// order.hpp.
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int v : e_)
      if (v < 0) throw Error("negative exponent");
  }

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial var(std::size_t nvars, std::size_t i, int e = 1) {
    Monomial m(nvars);
    if (i >= nvars) throw IndexError("variable index out of range");
    m.e_[i] = e;
    return m;
  }

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  // Exact quotient; requires o.divides(*this).
  Monomial divide(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r.e_[i] -= o.e_[i];
      if (r.e_[i] < 0) throw Error("monomial quotient does not exist");
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
    return r;
  }
  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::min(r.e_[i], b.e_[i]);
    return r;
  }
  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
  }

  auto operator<=>(const Monomial&) const = default;

  // "x^2*y" style, variables in declaration order; "1" for the empty product.
  std::string str(const RingContext& ctx) const {
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ctx.vars[i];
      if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
  }

  const std::vector<int>& exponents() const { return e_; }

 private:
  std::vector<int> e_;
};

}  // namespace primal
