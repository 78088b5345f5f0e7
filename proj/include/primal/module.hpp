#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primal/ideal.hpp"
#include "primal/matrix.hpp"

namespace primal {

// Finite-dimensionality is the common outcome but not guaranteed; nullopt
// means the dimension over Q is infinite.
using VsDim = std::optional<long long>;

inline std::string vsdim_str(const VsDim& d) {
  return d ? std::to_string(*d) : std::string("INFINITE");
}

// Finitely generated submodule of O^rank.  The augmented basis (and with it
// membership, normal forms, lifts and syzygies) is built on first use and
// shared across copies.
class Submodule {
 public:
  Submodule(RingPtr ring, std::size_t rank, std::vector<VecPoly> gens)
      : ring_(std::move(ring)), rank_(rank), box_(std::make_shared<Box>()) {
    for (auto& g : gens) {
      if (g.rank() != rank_) throw RankMismatchError("generator rank mismatch");
      require_same_ring(ring_, g.ring());
      if (!g.is_zero()) gens_.push_back(std::move(g));
    }
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<VecPoly>& generators() const { return gens_; }

  const AugmentedBasis& basis() const {
    std::lock_guard<std::mutex> lock(box_->mu);
    if (!box_->basis)
      box_->basis = std::make_shared<AugmentedBasis>(ring_, rank_, gens_);
    return *box_->basis;
  }

  bool member(const VecPoly& w) const { return basis().member(w); }
  VecPoly normal_form(const VecPoly& w) const { return basis().normal_form(w); }
  std::optional<std::vector<Polynomial>> lift(const VecPoly& w) const {
    return basis().lift(w);
  }
  std::vector<VecPoly> syzygies() const { return basis().syzygies(); }
  std::vector<VecPoly> groebner() const { return basis().span_groebner(); }

 private:
  struct Box {
    std::mutex mu;
    std::shared_ptr<AugmentedBasis> basis;
  };

  RingPtr ring_;
  std::size_t rank_;
  std::vector<VecPoly> gens_;
  std::shared_ptr<Box> box_;
};

inline bool submodule_equal(const Submodule& a, const Submodule& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.rank() != b.rank()) throw RankMismatchError("module ranks differ");
  return a.groebner() == b.groebner();
}

// Generators of {a in O^n : sum_i a_i t_i lies in the span of the w's},
// read off the syzygies of the concatenated list (t_1..t_n, w_1..w_m).
inline std::vector<VecPoly> preimage_kernel(RingPtr ring, std::size_t ambient_rank,
                                            const std::vector<VecPoly>& targets,
                                            const std::vector<VecPoly>& span) {
  std::size_t n = targets.size();
  if (n == 0) return {};
  std::vector<VecPoly> all = targets;
  for (const auto& w : span) all.push_back(w);
  AugmentedBasis ab(ring, ambient_rank, all);
  std::vector<VecPoly> out;
  for (const auto& syz : ab.syzygies()) {
    VecPoly head(ring, n);
    for (std::size_t i = 0; i < n; ++i) head[i] = syz[i];
    if (!head.is_zero()) out.push_back(std::move(head));
  }
  return out;
}

// Cokernel presentation: ngens generators subject to the columns of
// `relations`, over O or, when `base` is set, over O/base (the relations are
// then closed under base * e_i at construction).  ngens = 0 is the zero
// module.
class ModulePresentation {
 public:
  static ModulePresentation make(RingPtr ring, std::size_t ngens,
                                 std::vector<VecPoly> relations,
                                 std::optional<Ideal> base = std::nullopt) {
    ModulePresentation p;
    p.ring_ = ring;
    p.ngens_ = ngens;
    p.base_ = std::move(base);
    if (ngens == 0) {
      if (!relations.empty()) throw RankMismatchError("relations for a zero module");
      return p;
    }
    if (p.base_) {
      for (const auto& f : p.base_->generators()) {
        for (std::size_t i = 0; i < ngens; ++i) {
          VecPoly e(ring, ngens);
          e[i] = f;
          relations.push_back(std::move(e));
        }
      }
    }
    p.relations_.emplace(ring, ngens, std::move(relations));
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t ngens() const { return ngens_; }
  const std::optional<Ideal>& base() const { return base_; }
  const Submodule& relations() const {
    if (!relations_) throw Error("zero module has no relation submodule");
    return *relations_;
  }
  bool is_zero_presentation() const { return ngens_ == 0; }

  // The relation matrix with one column per relation generator.
  PolyMatrix relation_matrix() const {
    const auto& rel = relations().generators();
    PolyMatrix m(ring_, ngens_, rel.size());
    for (std::size_t k = 0; k < rel.size(); ++k)
      for (std::size_t i = 0; i < ngens_; ++i) m.at(i, k) = rel[k][i];
    return m;
  }

 private:
  RingPtr ring_;
  std::size_t ngens_ = 0;
  std::optional<Ideal> base_;
  std::optional<Submodule> relations_;
};

namespace detail {

// Count of monomials outside the staircase of the given lead monomials.
inline VsDim staircase_count(const std::vector<Monomial>& leads, std::size_t m) {
  for (const auto& l : leads)
    if (l.is_one()) return 0;
  std::vector<long long> bound(m, -1);
  for (const auto& l : leads) {
    int support = -1;
    bool pure = true;
    for (std::size_t j = 0; j < m && pure; ++j) {
      if (l[j] > 0) {
        if (support >= 0)
          pure = false;
        else
          support = static_cast<int>(j);
      }
    }
    if (pure && support >= 0) {
      long long e = l[support];
      if (bound[support] < 0 || e < bound[support]) bound[support] = e;
    }
  }
  long long box = 1;
  for (std::size_t j = 0; j < m; ++j) {
    if (bound[j] < 0) return std::nullopt;
    box *= bound[j];
    if (box > 10000000) throw Error("staircase too large to enumerate");
  }
  long long count = 0;
  std::vector<int> e(m, 0);
  while (true) {
    bool divisible = false;
    for (const auto& l : leads) {
      bool d = true;
      for (std::size_t j = 0; j < m && d; ++j)
        if (l[j] > e[j]) d = false;
      if (d) {
        divisible = true;
        break;
      }
    }
    if (!divisible) ++count;
    std::size_t j = 0;
    while (j < m) {
      if (++e[j] < bound[j]) break;
      e[j] = 0;
      ++j;
    }
    if (j == m) break;
  }
  return count;
}

}  // namespace detail

// dim_Q of the presented module: standard monomials per component of the
// relation module's lead staircase.
inline VsDim vs_dimension(const ModulePresentation& P) {
  if (P.is_zero_presentation()) return 0;
  std::size_t m = P.ring()->nvars();
  auto gb = P.relations().groebner();
  long long total = 0;
  for (std::size_t pos = 0; pos < P.ngens(); ++pos) {
    std::vector<Monomial> leads;
    for (const auto& u : gb) {
      auto l = u.lead(MonomialOrder::degrevlex());
      if (l && l->pos == pos) leads.push_back(l->mono);
    }
    VsDim c = detail::staircase_count(leads, m);
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

// dim_Q of O/I.
inline VsDim vs_dimension(const Ideal& I) {
  std::vector<VecPoly> rels;
  for (const auto& f : I.generators()) rels.push_back(VecPoly({f}));
  return vs_dimension(ModulePresentation::make(I.ring(), 1, std::move(rels)));
}

// Fitting ideal Fitt_r of the presented module, computed in O (the caller
// interprets it modulo the base ideal).  Fitt_r is generated by the
// (ngens - r)-minors of the relation matrix; index out of the matrix range
// degenerates to (1) or (0) as usual.
inline Ideal fitting_ideal(const ModulePresentation& P, long r) {
  long k = static_cast<long>(P.ngens()) - r;
  if (k <= 0) return Ideal::unit(P.ring());
  if (P.is_zero_presentation()) return Ideal::zero(P.ring());
  PolyMatrix m = P.relation_matrix();
  if (k > static_cast<long>(m.rows()) || k > static_cast<long>(m.cols()))
    return Ideal::zero(P.ring());
  return Ideal(P.ring(), m.minors(static_cast<std::size_t>(k)));
}

struct FreenessCheck {
  bool locally_free = false;
  long rank = 0;
  bool generated_ok = false;   // Fitt_r + base = (1)
  bool minors_vanish = false;  // Fitt_{r-1} inside base
  std::optional<Ideal> witness;
  std::string detail;
};

// Local freeness of rank r over O/base, decided through Fitting ideals:
// the module is locally free of constant rank r iff Fitt_r is the unit
// ideal modulo base while Fitt_{r-1} vanishes modulo base.
inline FreenessCheck is_locally_free(const ModulePresentation& P, long r) {
  if (!P.base()) throw Error("local freeness needs a base ideal");
  if (r < 0) throw Error("negative rank");
  const Ideal& base = *P.base();
  FreenessCheck out;
  out.rank = r;
  Ideal fr = fitting_ideal(P, r);
  out.generated_ok = ideal_sum(fr, base).is_unit();
  Ideal fr1 = fitting_ideal(P, r - 1);
  out.minors_vanish = base.contains(fr1);
  out.locally_free = out.generated_ok && out.minors_vanish;
  if (!out.generated_ok) {
    out.witness = ideal_sum(fr, base);
    out.detail = "rank-" + std::to_string(r) +
                 " Fitting ideal is not the unit ideal modulo the base";
  } else if (!out.minors_vanish) {
    out.witness = fr1;
    out.detail = "rank-" + std::to_string(r - 1) +
                 " Fitting ideal does not vanish modulo the base";
  } else {
    out.detail = "locally free of rank " + std::to_string(r);
  }
  return out;
}

}  // namespace primal
