#pragma once

#include <compare>
#include <utility>

#include "primal/errors.hpp"
#include "primal/monomial.hpp"

namespace primal {

// Term orders on monomials.
//
//   degrevlex  grade by total degree, ties broken so that the monomial whose
//              exponent vector has the *smaller* entry at the last differing
//              position is the larger one.
//   lex        plain lexicographic in variable declaration order.
//   block(k)   first compare the leading k variables by degrevlex among
//              themselves, then the remaining ones.  Any monomial involving
//              one of the first k variables beats every monomial free of
//              them, so a Groebner basis under block(k) eliminates them.
class MonomialOrder {
 public:
  enum class Kind { Degrevlex, Lex, Block };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::Block, k); }

  Kind kind() const { return kind_; }
  std::size_t block_size() const { return k_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) throw ContextMismatchError("monomials of different rings");
    switch (kind_) {
      case Kind::Lex:
        return lex_range(a, b, 0, a.size());
      case Kind::Degrevlex:
        return drl_range(a, b, 0, a.size());
      case Kind::Block: {
        std::size_t split = k_ < a.size() ? k_ : a.size();
        auto c = drl_range(a, b, 0, split);
        if (c != std::strong_ordering::equal) return c;
        return drl_range(a, b, split, a.size());
      }
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::less;
  }

  // Cache / dispatch key.
  std::pair<int, std::size_t> key() const { return {static_cast<int>(kind_), k_}; }

 private:
  MonomialOrder(Kind kind, std::size_t k) : kind_(kind), k_(k) {}

  static std::strong_ordering lex_range(const Monomial& a, const Monomial& b,
                                        std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      if (a[i] != b[i]) return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
  }

  static std::strong_ordering drl_range(const Monomial& a, const Monomial& b,
                                        std::size_t lo, std::size_t hi) {
    int da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::size_t k_;
};

}  // namespace primal
