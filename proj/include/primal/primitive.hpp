#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "primal/derivation.hpp"

namespace primal {

struct PrimitiveResult {
  Ideal h;
  Ideal g;
  Ideal integral;  // {f in g : xi(f) in g for all xi preserving h}
  std::vector<Derivation> derivations;
  std::optional<Submodule> witness;  // coefficient kernel K in O^n
  std::size_t audited_pairs = 0;
};

// The largest subideal of g whose elements stay inside g under every
// derivation preserving h.
//
// For f = sum a_i g_i and xi preserving h, xi(f) = sum a_i xi(g_i) modulo g,
// so f qualifies iff the coefficient vector a solves, for every generator
// xi_t of Der(h), the membership sum_i a_i xi_t(g_i) in g.  The solution set
// K is a preimage kernel; h and g^2 qualify outright and are appended.  The
// derivation condition is linear over O in xi, so checking the generators of
// Der(h) suffices.  Every returned basis element is audited against the
// definition, and the sandwich h + g^2 <= result <= g is re-verified.
inline PrimitiveResult primitive_ideal(
    const Ideal& h, const Ideal& g,
    std::optional<std::vector<Derivation>> ders = std::nullopt) {
  require_same_ring(h.ring(), g.ring());
  const RingPtr& ring = h.ring();
  for (const auto& f : h.generators())
    if (!g.contains(f)) throw NotContainedError("h is not contained in g");

  PrimitiveResult out{h, g, Ideal::zero(ring), {}, std::nullopt, 0};
  out.derivations = ders ? std::move(*ders) : log_derivations(h);
  const auto& gg = g.generators();
  std::size_t n = gg.size();
  std::size_t s = out.derivations.size();

  std::vector<Polynomial> gens;
  if (n > 0 && s > 0) {
    std::vector<VecPoly> targets;
    for (std::size_t i = 0; i < n; ++i) {
      VecPoly col(ring, s);
      for (std::size_t t = 0; t < s; ++t) col[t] = out.derivations[t].apply(gg[i]);
      targets.push_back(std::move(col));
    }
    std::vector<VecPoly> span;
    for (std::size_t t = 0; t < s; ++t) {
      for (const auto& q : gg) {
        VecPoly w(ring, s);
        w[t] = q;
        span.push_back(std::move(w));
      }
    }
    std::vector<VecPoly> kernel = preimage_kernel(ring, s, targets, span);
    out.witness.emplace(ring, n, kernel);
    for (const auto& a : kernel) {
      Polynomial f(ring);
      for (std::size_t i = 0; i < n; ++i) f += a[i] * gg[i];
      gens.push_back(std::move(f));
    }
  } else if (s == 0) {
    // No derivations to test against: every element of g qualifies.
    gens = gg;
  }
  for (const auto& f : h.generators()) gens.push_back(f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) gens.push_back(gg[i] * gg[j]);
  out.integral = Ideal(ring, std::move(gens));

  // Definition audit on the canonical basis.
  for (const auto& f : out.integral.groebner()) {
    for (const auto& xi : out.derivations) {
      if (!g.contains(xi.apply(f)))
        throw CheckError("primitive ideal element escapes g under a derivation");
      ++out.audited_pairs;
    }
  }
  Ideal floor = ideal_sum(h, ideal_power(g, 2));
  if (!out.integral.contains(floor))
    throw CheckError("primitive ideal lost h + g^2");
  if (!g.contains(out.integral))
    throw CheckError("primitive ideal escapes g");
  return out;
}

// Generators of the second symbolic-power analogue carried over to O/h:
// normal forms modulo h of the primitive ideal's basis.  Meaningful when g
// is radical over h, which the caller asserts; the Jacobian condition is
// checked here.
inline std::vector<Polynomial> symbolic_power_2(const Ideal& h, const Ideal& g) {
  if (!check_jacobian_condition(h, g))
    throw JacobianConditionError("Jacobian condition fails for (h, g)");
  PrimitiveResult pr = primitive_ideal(h, g);
  std::vector<Polynomial> out;
  for (const auto& f : pr.integral.groebner()) {
    Polynomial r = h.normal_form(f);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

struct PropertyReport {
  bool lower = false;  // h + g^2 inside the primitive ideal
  bool upper = false;  // primitive ideal inside g
  std::optional<bool> intersection;  // distributes over g1 cap g2
};

// Re-checks the containment chain from scratch, and optionally the
// intersection identity on a supplied pair g = g1 cap g2.
inline PropertyReport verify_primitive_properties(
    const Ideal& h, const Ideal& g,
    std::optional<std::pair<Ideal, Ideal>> pair = std::nullopt) {
  PropertyReport rep;
  Ideal integral = primitive_ideal(h, g).integral;
  rep.lower = integral.contains(ideal_sum(h, ideal_power(g, 2)));
  rep.upper = g.contains(integral);
  if (pair) {
    Ideal cap = ideal_intersect(pair->first, pair->second);
    Ideal lhs = primitive_ideal(h, cap).integral;
    Ideal rhs = ideal_intersect(primitive_ideal(h, pair->first).integral,
                                primitive_ideal(h, pair->second).integral);
    rep.intersection = ideal_equal(lhs, rhs);
  }
  return rep;
}

}  // namespace primal
