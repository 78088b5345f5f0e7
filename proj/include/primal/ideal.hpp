#pragma once

#include <bit>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "primal/groebner.hpp"

namespace primal {

inline std::vector<Polynomial> groebner_basis(
    const std::vector<Polynomial>& gens,
    const MonomialOrder& ord = MonomialOrder::degrevlex()) {
  std::vector<VecPoly> v;
  for (const auto& g : gens)
    if (!g.is_zero()) v.push_back(VecPoly({g}));
  std::vector<Polynomial> out;
  for (const auto& u : module_groebner(v, ord)) out.push_back(u[0]);
  return out;
}

inline Polynomial poly_normal_form(const Polynomial& f,
                                   const std::vector<Polynomial>& basis,
                                   const MonomialOrder& ord = MonomialOrder::degrevlex()) {
  std::vector<VecPoly> b;
  for (const auto& g : basis)
    if (!g.is_zero()) b.push_back(VecPoly({g}));
  return module_normal_form(VecPoly({f}), b, ord)[0];
}

// Ideal of O given by a finite generator list.  Generator order is kept as
// written (several constructions pair generators with indices); zero
// generators are dropped.  Reduced Groebner bases are cached per order and
// shared across copies.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    if (!ring_) throw Error("ideal needs a ring");
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      require_same_ring(ring_, g.ring());
      gens_.push_back(std::move(g));
    }
  }

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring) {
    Ideal i(ring, {});
    i.gens_.push_back(Polynomial::one(ring));
    return i;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // By value: callers routinely iterate over bases of temporaries, and the
  // vectors are small.  The cache still makes repeated calls cheap.
  std::vector<Polynomial> groebner(
      const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto key = ord.key();
    auto it = cache_->gb.find(key);
    if (it == cache_->gb.end()) {
      auto gb = std::make_shared<const std::vector<Polynomial>>(groebner_basis(gens_, ord));
      it = cache_->gb.emplace(key, std::move(gb)).first;
    }
    return *it->second;
  }

  Polynomial normal_form(const Polynomial& f,
                         const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
    return poly_normal_form(f, groebner(ord), ord);
  }

  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }
  bool contains(const Ideal& other) const {
    for (const auto& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb.front().is_constant();
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, std::size_t>,
             std::shared_ptr<const std::vector<Polynomial>>> gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return Ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_power(const Ideal& a, unsigned e) {
  if (e == 0) return Ideal::unit(a.ring());
  Ideal r = a;
  for (unsigned i = 1; i < e; ++i) r = ideal_product(r, a);
  return r;
}

namespace detail {

// Elimination happens in an extension with one tag variable prepended; '#'
// cannot occur in user variable names, so no collision is possible.
inline RingPtr tagged_ring(const RingPtr& base) {
  std::vector<std::string> vars = {"#t"};
  for (const auto& v : base->vars) vars.push_back(v);
  return make_ring(std::move(vars));
}

inline Polynomial inject(const Polynomial& f, const RingPtr& ext) {
  Polynomial r(ext);
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e = {0};
    for (int x : m.exponents()) e.push_back(x);
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

inline bool tag_free(const Polynomial& f) {
  for (const auto& [m, c] : f.terms())
    if (m[0] > 0) return false;
  return true;
}

inline Polynomial retract(const Polynomial& f, const RingPtr& base) {
  Polynomial r(base);
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> e(m.exponents().begin() + 1, m.exponents().end());
    r.add_term(Monomial(std::move(e)), c);
  }
  return r;
}

}  // namespace detail

// I cap J = (t*I + (1-t)*J) cap O, by elimination of the tag.
inline Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.ring());
  RingPtr ext = detail::tagged_ring(a.ring());
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::one(ext) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * detail::inject(f, ext));
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * detail::inject(g, ext));
  auto gb = groebner_basis(gens, MonomialOrder::block(1));
  std::vector<Polynomial> kept;
  for (const auto& f : gb)
    if (detail::tag_free(f)) kept.push_back(detail::retract(f, a.ring()));
  return Ideal(a.ring(), std::move(kept));
}

// Exact single-divisor division; throws if f is not a multiple of g.
inline Polynomial exact_quotient(const Polynomial& f, const Polynomial& g,
                                 const MonomialOrder& ord = MonomialOrder::degrevlex()) {
  if (g.is_zero()) throw Error("division by the zero polynomial");
  Polynomial q(f.ring());
  Polynomial r = f;
  auto [gm, gc] = g.leading(ord);
  while (!r.is_zero()) {
    auto [rm, rc] = r.leading(ord);
    if (!gm.divides(rm)) throw CheckError("inexact polynomial division");
    Monomial m = rm.divide(gm);
    Rational c = rc / gc;
    q.add_term(m, c);
    r -= g.term_multiple(m, c);
  }
  return q;
}

// (I : f) = (1/f) (I cap (f)).
inline Ideal ideal_quotient_single(const Ideal& a, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(a.ring());
  Ideal cap = ideal_intersect(a, Ideal(a.ring(), {f}));
  std::vector<Polynomial> gens;
  for (const auto& g : cap.generators()) gens.push_back(exact_quotient(g, f));
  return Ideal(a.ring(), std::move(gens));
}

inline Ideal ideal_quotient(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.is_zero()) return Ideal::unit(a.ring());
  bool first = true;
  Ideal acc = Ideal::zero(a.ring());
  for (const auto& f : b.generators()) {
    Ideal q = ideal_quotient_single(a, f);
    acc = first ? q : ideal_intersect(acc, q);
    first = false;
  }
  return acc;
}

// Equality via the uniqueness of the reduced degrevlex basis.
inline bool ideal_equal(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  return a.groebner() == b.groebner();
}

inline bool ideal_subset(const Ideal& a, const Ideal& b) { return b.contains(a); }

// Dimension of O/I: the largest number of variables that stay algebraically
// independent, read off the lead monomials; -1 for the unit ideal.  Subset
// enumeration is fine at the variable counts this library is built for.
inline long krull_dimension(const Ideal& I) {
  const auto& gb = I.groebner();
  for (const auto& f : gb)
    if (f.is_constant()) return -1;
  std::size_t m = I.ring()->nvars();
  if (m > 24) throw Error("too many variables for dimension enumeration");
  std::vector<Monomial> leads;
  for (const auto& f : gb) leads.push_back(f.leading(MonomialOrder::degrevlex()).first);
  long best = 0;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    bool independent = true;
    for (const auto& lt : leads) {
      bool inside = true;
      for (std::size_t i = 0; i < m && inside; ++i)
        if (lt[i] > 0 && !(mask & (1ul << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max<long>(best, std::popcount(mask));
  }
  return best;
}

// Number of generators a complete intersection of this ideal would have.
inline long codimension(const Ideal& I) {
  return static_cast<long>(I.ring()->nvars()) - krull_dimension(I);
}

}  // namespace primal
