#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "primal/vecpoly.hpp"

namespace primal {

// Full normal form of w against `basis`: every term of the result is
// irreducible, i.e. not divisible by the lead of any basis element in the
// same component.  When `basis` is a Groebner basis the result is the
// canonical coset representative.
inline VecPoly module_normal_form(VecPoly w, const std::vector<VecPoly>& basis,
                                  const MonomialOrder& ord) {
  struct Red {
    const VecPoly* v;
    VecPoly::Lead lead;
  };
  std::vector<Red> reds;
  reds.reserve(basis.size());
  for (const auto& b : basis) {
    if (auto l = b.lead(ord)) reds.push_back({&b, *l});
  }
  VecPoly r(w.ring(), w.rank());
  while (auto lw = w.lead(ord)) {
    bool hit = false;
    for (const auto& red : reds) {
      if (red.lead.pos == lw->pos && red.lead.mono.divides(lw->mono)) {
        w -= red.v->term_multiple(lw->mono.divide(red.lead.mono),
                                  lw->coef / red.lead.coef);
        hit = true;
        break;
      }
    }
    if (!hit) {
      r[lw->pos].add_term(lw->mono, lw->coef);
      w[lw->pos].add_term(lw->mono, -lw->coef);
    }
  }
  return r;
}

namespace detail {

inline bool single_component(const VecPoly& v) {
  int nz = 0;
  for (std::size_t i = 0; i < v.rank(); ++i)
    if (!v[i].is_zero() && ++nz > 1) return false;
  return true;
}

}  // namespace detail

// Reduced Groebner basis of the submodule of O^rank generated by `gens`,
// under position-over-term with `ord` inside components.  The result is
// monic, autoreduced, minimal and sorted ascending by lead, hence uniquely
// determined by the submodule; permuting or repeating input generators does
// not change it.
//
// Buchberger with the normal (lowest lcm degree first) selection strategy.
// The coprimality criterion is sound only for pairs that behave like ring
// elements, so it is restricted to elements supported in a single component;
// e.g. for u = x e1 + e2, v = y e1 + e2 the syzygy (y - x) e2 would
// otherwise be lost.  The chain criterion is applied at selection time
// against previously treated pairs only.
inline std::vector<VecPoly> module_groebner(const std::vector<VecPoly>& gens,
                                            const MonomialOrder& ord) {
  std::vector<VecPoly> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(g);
  if (G.empty()) return G;

  std::vector<VecPoly::Lead> leads;
  std::vector<char> single;
  for (const auto& g : G) {
    leads.push_back(*g.lead(ord));
    single.push_back(detail::single_component(g) ? 1 : 0);
  }

  std::set<std::tuple<int, std::size_t, std::size_t>> queue;
  std::set<std::pair<std::size_t, std::size_t>> treated;
  auto enqueue_with_all_before = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (leads[i].pos != leads[k].pos) continue;
      int d = Monomial::lcm(leads[i].mono, leads[k].mono).degree();
      queue.insert({d, i, k});
    }
  };
  for (std::size_t k = 0; k < G.size(); ++k) enqueue_with_all_before(k);

  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    treated.insert({i, j});

    const auto& li = leads[i];
    const auto& lj = leads[j];
    if (single[i] && single[j] && Monomial::coprime(li.mono, lj.mono)) continue;

    Monomial L = Monomial::lcm(li.mono, lj.mono);
    bool chained = false;
    for (std::size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == i || k == j || leads[k].pos != li.pos) continue;
      if (!leads[k].mono.divides(L)) continue;
      auto ik = std::minmax(i, k);
      auto jk = std::minmax(j, k);
      chained = treated.count({ik.first, ik.second}) > 0 &&
                treated.count({jk.first, jk.second}) > 0;
    }
    if (chained) continue;

    VecPoly s = G[i].term_multiple(L.divide(li.mono), li.coef.inverse()) -
                G[j].term_multiple(L.divide(lj.mono), lj.coef.inverse());
    VecPoly r = module_normal_form(std::move(s), G, ord);
    if (r.is_zero()) continue;
    G.push_back(std::move(r));
    leads.push_back(*G.back().lead(ord));
    single.push_back(detail::single_component(G.back()) ? 1 : 0);
    enqueue_with_all_before(G.size() - 1);
  }

  // Minimalize: keep only elements whose lead no other kept lead divides.
  // Processing in ascending lead order means any divisor is seen first.
  std::vector<std::size_t> idx(G.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (leads[a].pos != leads[b].pos || leads[a].mono != leads[b].mono)
      return pot_greater(leads[b], leads[a], ord);
    return a < b;
  });
  std::vector<VecPoly> kept;
  std::vector<VecPoly::Lead> kept_leads;
  for (std::size_t k : idx) {
    bool redundant = false;
    for (const auto& l : kept_leads) {
      if (l.pos == leads[k].pos && l.mono.divides(leads[k].mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) {
      kept.push_back(G[k]);
      kept_leads.push_back(leads[k]);
    }
  }

  // Autoreduce tails (leads are already pairwise irreducible), then scale
  // monic.  One pass is enough: reduction only consults the fixed lead set.
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<VecPoly> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    kept[i] = module_normal_form(kept[i], others, ord);
  }
  for (auto& v : kept) v = v.scaled(v.lead(ord)->coef.inverse());

  std::sort(kept.begin(), kept.end(), [&](const VecPoly& a, const VecPoly& b) {
    return pot_greater(*b.lead(ord), *a.lead(ord), ord);
  });
  return kept;
}

// Groebner basis of {(v_k | e_k)} in O^(r+s): the ambient block dominates
// the tracking block, so this one basis answers membership, division and
// syzygy questions about the span of the v_k.
//
// Every basis element u satisfies  ambient(u) = sum_k tracking_k(u) * v_k,
// an invariant preserved from the input generators by linearity; lifts and
// syzygies are read off from it and re-verified by substitution.
class AugmentedBasis {
 public:
  AugmentedBasis(RingPtr ring, std::size_t ambient_rank, std::vector<VecPoly> gens,
                 MonomialOrder ord = MonomialOrder::degrevlex())
      : ring_(std::move(ring)), r_(ambient_rank), s_(gens.size()), ord_(ord),
        gens_(std::move(gens)) {
    if (r_ == 0) throw RankMismatchError("module rank must be positive");
    std::vector<VecPoly> aug;
    aug.reserve(s_);
    for (std::size_t k = 0; k < s_; ++k) {
      if (gens_[k].rank() != r_) throw RankMismatchError("generator rank mismatch");
      require_same_ring(ring_, gens_[k].ring());
      VecPoly w(ring_, r_ + s_);
      for (std::size_t i = 0; i < r_; ++i) w[i] = gens_[k][i];
      w[r_ + k] = Polynomial::one(ring_);
      aug.push_back(std::move(w));
    }
    gb_ = module_groebner(aug, ord_);
  }

  const std::vector<VecPoly>& generators() const { return gens_; }
  std::size_t ambient_rank() const { return r_; }

  // Canonical representative of w modulo the span of the generators.
  VecPoly normal_form(const VecPoly& w) const {
    VecPoly full = reduce_augmented(w);
    VecPoly amb(ring_, r_);
    for (std::size_t i = 0; i < r_; ++i) amb[i] = full[i];
    return amb;
  }

  bool member(const VecPoly& w) const { return normal_form(w).is_zero(); }

  // Coefficients c with w = sum_k c_k v_k, or nullopt if w is not in the
  // span.  Always checked by substitution before returning.
  std::optional<std::vector<Polynomial>> lift(const VecPoly& w) const {
    VecPoly full = reduce_augmented(w);
    for (std::size_t i = 0; i < r_; ++i)
      if (!full[i].is_zero()) return std::nullopt;
    std::vector<Polynomial> c;
    c.reserve(s_);
    for (std::size_t k = 0; k < s_; ++k) c.push_back(-full[r_ + k]);
    VecPoly test(ring_, r_);
    for (std::size_t k = 0; k < s_; ++k) test = test + gens_[k].poly_multiple(c[k]);
    if (test != w) throw CheckError("lift failed substitution audit");
    return c;
  }

  // Generators of the syzygy module {c in O^s : sum c_k v_k = 0}, read off
  // the basis elements whose lead fell into the tracking block.
  std::vector<VecPoly> syzygies() const {
    std::vector<VecPoly> out;
    if (s_ == 0) return out;
    for (const auto& u : gb_) {
      auto l = u.lead(ord_);
      if (!l || l->pos < r_) continue;
      VecPoly syz(ring_, s_);
      for (std::size_t k = 0; k < s_; ++k) syz[k] = u[r_ + k];
      VecPoly test(ring_, r_);
      for (std::size_t k = 0; k < s_; ++k)
        test = test + gens_[k].poly_multiple(syz[k]);
      if (!test.is_zero()) throw CheckError("syzygy failed substitution audit");
      out.push_back(std::move(syz));
    }
    return out;
  }

  // Reduced Groebner basis of the span itself: ambient parts of the basis
  // elements whose lead stayed in the ambient block.
  std::vector<VecPoly> span_groebner() const {
    std::vector<VecPoly> out;
    for (const auto& u : gb_) {
      auto l = u.lead(ord_);
      if (!l || l->pos >= r_) continue;
      VecPoly amb(ring_, r_);
      for (std::size_t i = 0; i < r_; ++i) amb[i] = u[i];
      out.push_back(std::move(amb));
    }
    return out;
  }

 private:
  VecPoly reduce_augmented(const VecPoly& w) const {
    if (w.rank() != r_) throw RankMismatchError("rank mismatch");
    require_same_ring(ring_, w.ring());
    VecPoly full(ring_, r_ + s_);
    for (std::size_t i = 0; i < r_; ++i) full[i] = w[i];
    return module_normal_form(std::move(full), gb_, ord_);
  }

  RingPtr ring_;
  std::size_t r_, s_;
  MonomialOrder ord_;
  std::vector<VecPoly> gens_;
  std::vector<VecPoly> gb_;
};

}  // namespace primal
