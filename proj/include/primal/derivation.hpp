#pragma once

#include <string>
#include <utility>
#include <vector>

#include "primal/matrix.hpp"
#include "primal/module.hpp"

namespace primal {

// A polynomial vector field sum_j coeffs[j] d/dx_j.
struct Derivation {
  RingPtr ring;
  std::vector<Polynomial> coeffs;

  Polynomial apply(const Polynomial& f) const {
    require_same_ring(ring, f.ring());
    Polynomial r(ring);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j].is_zero()) continue;
      r += coeffs[j] * f.derivative(j);
    }
    return r;
  }

  std::string str(const MonomialOrder& ord = MonomialOrder::degrevlex()) const {
    std::string s = "(";
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      if (j) s += ", ";
      s += coeffs[j].str(ord);
    }
    return s + ")";
  }
};

// Generating set of Der(h) = {xi : xi(h) contained in h}, as a module over O.
//
// xi = (a_1..a_m) preserves h iff for every generator h_i the value
// sum_j a_j dh_i/dx_j falls back into h, i.e. iff (a, b) solves the linear
// system with columns (dh_i/dx_j)_i and the h-multiple unit columns.  The
// returned set is the canonical module basis of all solutions, so it already
// contains the trivial fields h_k d/dx_j up to basis change; every generator
// is audited against the definition before being returned.
inline std::vector<Derivation> log_derivations(const Ideal& h) {
  const RingPtr& ring = h.ring();
  std::size_t m = ring->nvars();
  const auto& hg = h.generators();
  std::size_t p = hg.size();

  std::vector<VecPoly> raw;
  if (p == 0) {
    // Nothing to preserve: the coordinate fields generate everything.
    for (std::size_t j = 0; j < m; ++j) {
      VecPoly e(ring, m);
      e[j] = Polynomial::one(ring);
      raw.push_back(std::move(e));
    }
  } else {
    std::vector<VecPoly> targets;
    for (std::size_t j = 0; j < m; ++j) {
      VecPoly col(ring, p);
      for (std::size_t i = 0; i < p; ++i) col[i] = hg[i].derivative(j);
      targets.push_back(std::move(col));
    }
    std::vector<VecPoly> span;
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t k = 0; k < p; ++k) {
        VecPoly w(ring, p);
        w[i] = hg[k];
        span.push_back(std::move(w));
      }
    }
    raw = preimage_kernel(ring, p, targets, span);
    // Canonical generating set.
    raw = module_groebner(raw, MonomialOrder::degrevlex());
  }

  std::vector<Derivation> out;
  for (auto& v : raw) {
    Derivation d{ring, {}};
    for (std::size_t j = 0; j < m; ++j) d.coeffs.push_back(v[j]);
    for (const auto& f : hg)
      if (!h.contains(d.apply(f)))
        throw CheckError("derivation fails to preserve its ideal");
    out.push_back(std::move(d));
  }
  return out;
}

struct JacobianData {
  Ideal h;
  long grade = 0;           // codimension = number of generators
  PolyMatrix jacobian;      // rows: generators, columns: variables
  std::vector<Polynomial> minors;
  Ideal jacobian_ideal;     // h + maximal minors
};

// h + (maximal minors of the Jacobian).  Requires h to be a complete
// intersection: the generator count must match the codimension, otherwise
// the minor size would be wrong.
inline JacobianData jacobian_ideal(const Ideal& h) {
  const RingPtr& ring = h.ring();
  std::size_t m = ring->nvars();
  std::size_t p = h.generators().size();
  if (static_cast<long>(p) != codimension(h))
    throw NotCompleteIntersectionError(
        "generator count " + std::to_string(p) + " differs from codimension " +
        std::to_string(codimension(h)));

  PolyMatrix jac(ring, p, m);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < m; ++j) jac.at(i, j) = h.generators()[i].derivative(j);
  std::vector<Polynomial> minors = jac.minors(p);
  std::vector<Polynomial> gens = h.generators();
  for (const auto& d : minors) gens.push_back(d);
  return JacobianData{h, static_cast<long>(p), std::move(jac), std::move(minors),
                      Ideal(ring, std::move(gens))};
}

// The singular locus of V(h) must miss enough of V(g):
// dim O/(J(h) + g) < dim O/g.  This is the dimension form of the condition
// that J(h) avoids every minimal prime of g; it is what makes the torsion
// part of the conormal module vanish away from the bad set.  Unmixedness of
// g is asserted by the caller, not checked.
inline bool check_jacobian_condition(const Ideal& h, const Ideal& g) {
  require_same_ring(h.ring(), g.ring());
  JacobianData jd = jacobian_ideal(h);
  long dim_g = krull_dimension(g);
  long dim_cut = krull_dimension(ideal_sum(jd.jacobian_ideal, g));
  return dim_cut < dim_g;
}

}  // namespace primal
