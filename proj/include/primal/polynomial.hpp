#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primal/errors.hpp"
#include "primal/monomial.hpp"
#include "primal/order.hpp"
#include "primal/rational.hpp"
#include "primal/ring.hpp"

namespace primal {

// Sparse polynomial over Q.  Terms are held in a std::map keyed by the
// structural monomial comparison, so iteration order is deterministic and
// independent of construction history; printing resorts by the active term
// order.  No zero coefficients are ever stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {
    if (!ring_) throw Error("polynomial needs a ring");
  }

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Rational& c) {
    Polynomial p(std::move(ring));
    p.add_term(Monomial::one(p.ring_->nvars()), c);
    return p;
  }
  static Polynomial one(RingPtr ring) { return constant(std::move(ring), 1); }
  static Polynomial variable(RingPtr ring, std::size_t i) {
    Polynomial p(std::move(ring));
    p.add_term(Monomial::var(p.ring_->nvars(), i), 1);
    return p;
  }
  static Polynomial term(RingPtr ring, Monomial m, const Rational& c) {
    Polynomial p(std::move(ring));
    p.add_term(std::move(m), c);
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
  }
  Rational constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw Error("not a constant");
    return terms_.begin()->second;
  }

  // -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  void add_term(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same_ring(ring_, o.ring_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  Polynomial operator+(const Polynomial& o) const {
    Polynomial r = *this;
    r += o;
    return r;
  }
  Polynomial operator-(const Polynomial& o) const {
    Polynomial r = *this;
    r -= o;
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    require_same_ring(ring_, o.ring_);
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rational& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
  }

  // this * c * m, in one pass.
  Polynomial term_multiple(const Monomial& m, const Rational& c) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial r = one(ring_);
    Polynomial base = *this;
    while (e > 0) {
      if (e & 1u) r = r * base;
      e >>= 1u;
      if (e > 0) base = base * base;
    }
    return r;
  }

  Polynomial derivative(std::size_t var) const {
    if (var >= ring_->nvars()) throw IndexError("variable index out of range");
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
      int e = m[var];
      if (e == 0) continue;
      std::vector<int> exps = m.exponents();
      exps[var] = e - 1;
      r.add_term(Monomial(std::move(exps)), c * Rational(e));
    }
    return r;
  }

  // Substitute `value` for the named variable; all other variables are kept.
  Polynomial substitute(std::size_t var, const Polynomial& value) const {
    if (var >= ring_->nvars()) throw IndexError("variable index out of range");
    require_same_ring(ring_, value.ring());
    Polynomial r(ring_);
    std::vector<Polynomial> powers = {one(ring_)};  // powers[k] = value^k
    for (const auto& [m, c] : terms_) {
      int e = m[var];
      while (static_cast<int>(powers.size()) <= e)
        powers.push_back(powers.back() * value);
      std::vector<int> exps = m.exponents();
      exps[var] = 0;
      r += powers[e].term_multiple(Monomial(std::move(exps)), c);
    }
    return r;
  }

  // Simultaneous substitution (needed when two variables trade places).
  Polynomial substitute_many(const std::vector<std::pair<std::size_t, Polynomial>>& subs) const {
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_) {
      Polynomial t = constant(ring_, c);
      std::vector<int> rest = m.exponents();
      for (const auto& [var, value] : subs) {
        int e = rest[var];
        rest[var] = 0;
        if (e > 0) t *= value.pow(static_cast<unsigned>(e));
      }
      r += t.term_multiple(Monomial(std::move(rest)), 1);
    }
    return r;
  }

  std::pair<Monomial, Rational> leading(const MonomialOrder& ord) const {
    if (terms_.empty()) throw Error("leading term of zero");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (ord.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }

  bool operator==(const Polynomial& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Canonical text form: terms descending in `ord`, explicit '*' between
  // factors, '^' for powers, unit coefficients elided, rationals as "n/d".
  std::string str(const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [&](const auto* a, const auto* b) {
      return ord.greater(a->first, b->first);
    });
    std::string s;
    bool first = true;
    for (const auto* t : ts) {
      const Rational c = t->second;
      const Rational a = c.abs();
      if (first) {
        if (c.sign() < 0) s += "-";
        first = false;
      } else {
        s += c.sign() < 0 ? " - " : " + ";
      }
      if (t->first.is_one()) {
        s += a.str();
      } else {
        if (!a.is_one()) s += a.str() + "*";
        s += t->first.str(*ring_);
      }
    }
    return s;
  }

 private:
  RingPtr ring_;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }

}  // namespace primal
