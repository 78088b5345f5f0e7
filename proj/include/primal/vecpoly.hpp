#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primal/polynomial.hpp"

namespace primal {

// Element of a free module O^rank.  Ideals are handled as the rank-1 case
// throughout, so there is exactly one reduction engine.
//
// Module terms are ordered position-over-term: a term in a lower-numbered
// position beats every term in a higher-numbered one, and ties within a
// position fall back to the monomial order.  Consequently the leading term
// of a vector always lives in its first nonzero component, and components
// 0..r-1 of an augmented module dominate the tracking components appended
// after them.
class VecPoly {
 public:
  VecPoly(RingPtr ring, std::size_t rank)
      : ring_(std::move(ring)), c_(rank, Polynomial(ring_)) {
    if (rank == 0) throw RankMismatchError("module rank must be positive");
  }
  explicit VecPoly(std::vector<Polynomial> comps) : c_(std::move(comps)) {
    if (c_.empty()) throw RankMismatchError("module rank must be positive");
    ring_ = c_.front().ring();
    for (const auto& p : c_) require_same_ring(ring_, p.ring());
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return c_.size(); }
  const Polynomial& operator[](std::size_t i) const { return c_.at(i); }
  Polynomial& operator[](std::size_t i) { return c_.at(i); }
  const std::vector<Polynomial>& components() const { return c_; }

  bool is_zero() const {
    for (const auto& p : c_)
      if (!p.is_zero()) return false;
    return true;
  }

  VecPoly operator+(const VecPoly& o) const {
    check(o);
    VecPoly r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
    return r;
  }
  VecPoly operator-(const VecPoly& o) const {
    check(o);
    VecPoly r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
    return r;
  }
  VecPoly& operator-=(const VecPoly& o) {
    check(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  VecPoly operator-() const {
    VecPoly r = *this;
    for (auto& p : r.c_) p = -p;
    return r;
  }

  VecPoly term_multiple(const Monomial& m, const Rational& k) const {
    VecPoly r(ring_, rank());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i].term_multiple(m, k);
    return r;
  }
  VecPoly scaled(const Rational& k) const {
    VecPoly r(ring_, rank());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i].scaled(k);
    return r;
  }
  VecPoly poly_multiple(const Polynomial& f) const {
    VecPoly r(ring_, rank());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * f;
    return r;
  }

  struct Lead {
    std::size_t pos;
    Monomial mono;
    Rational coef;
  };

  std::optional<Lead> lead(const MonomialOrder& ord) const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i].is_zero()) {
        auto [m, k] = c_[i].leading(ord);
        return Lead{i, m, k};
      }
    }
    return std::nullopt;
  }

  bool operator==(const VecPoly& o) const {
    return same_ring(ring_, o.ring_) && c_ == o.c_;
  }
  bool operator!=(const VecPoly& o) const { return !(*this == o); }

  // "(f_0, f_1, ...)"
  std::string str(const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].str(ord);
    }
    return s + ")";
  }

 private:
  void check(const VecPoly& o) const {
    require_same_ring(ring_, o.ring_);
    if (rank() != o.rank()) throw RankMismatchError("module ranks differ");
  }

  RingPtr ring_;
  std::vector<Polynomial> c_;
};

// true when a's lead beats b's lead in the position-over-term sense.
inline bool pot_greater(const VecPoly::Lead& a, const VecPoly::Lead& b,
                        const MonomialOrder& ord) {
  if (a.pos != b.pos) return a.pos < b.pos;
  return ord.greater(a.mono, b.mono);
}

}  // namespace primal
