#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primal/primitive.hpp"

namespace primal {

namespace detail {

inline std::vector<VecPoly> wrap1(const std::vector<Polynomial>& fs) {
  std::vector<VecPoly> out;
  out.reserve(fs.size());
  for (const auto& f : fs)
    if (!f.is_zero()) out.push_back(VecPoly({f}));
  return out;
}

// {a in O^n : sum a_i t_i in J}, as relation columns.
inline std::vector<VecPoly> relations_into(const RingPtr& ring,
                                           const std::vector<Polynomial>& t,
                                           const Ideal& J) {
  return preimage_kernel(ring, 1, wrap1(t), wrap1(J.generators()));
}

}  // namespace detail

// The conormal data of a nested pair h <= g of complete intersections:
//
//   M = g/(g^2 + h)   the conormal module of g along the subvariety of h,
//   T = I/(g^2 + h)   its torsion part, I the primitive ideal of g rel. h,
//   N = g/I           the torsion-free quotient,
//
// all presented over O/g.  The exact sequence 0 -> T -> M -> N -> 0 is
// re-verified on the computed presentations: every generator of T is
// expressed inside the span of g's generators, and the relation module of
// N must equal the relation module of M plus those torsion images.
struct ConormalData {
  Ideal h;
  Ideal g;
  Ideal squares_plus_h;  // g^2 + h
  Ideal integral;        // the primitive ideal of g relative to h
  long p;                // grade of h = its generator count
  long n;                // grade of g = its generator count
  long rank_target;      // n - p, the expected rank of N
  std::vector<Derivation> derivations;
  ModulePresentation M;
  ModulePresentation T;
  ModulePresentation N;
  bool t_maps_into_m;
  bool n_relations_consistent;
};

inline ConormalData conormal(const Ideal& h, const Ideal& g) {
  require_same_ring(h.ring(), g.ring());
  const RingPtr& ring = h.ring();

  long n = codimension(g);
  if (n != static_cast<long>(g.generators().size()))
    throw NotCompleteIntersectionError(
        "g has " + std::to_string(g.generators().size()) +
        " generators but codimension " + std::to_string(n));
  if (!check_jacobian_condition(h, g))
    throw JacobianConditionError("Jacobian condition fails for (h, g)");
  long p = static_cast<long>(h.generators().size());

  PrimitiveResult pr = primitive_ideal(h, g);
  Ideal integral = std::move(pr.integral);
  Ideal squares_plus_h = ideal_sum(ideal_power(g, 2), h);

  const auto& gg = g.generators();
  ModulePresentation M = ModulePresentation::make(
      ring, gg.size(), detail::relations_into(ring, gg, squares_plus_h), g);

  std::vector<Polynomial> tgens = integral.groebner();
  ModulePresentation T = ModulePresentation::make(
      ring, tgens.size(), detail::relations_into(ring, tgens, squares_plus_h), g);

  ModulePresentation N = ModulePresentation::make(
      ring, gg.size(), detail::relations_into(ring, gg, integral), g);

  // Express each torsion generator in the generators of g.
  AugmentedBasis g_basis(ring, 1, detail::wrap1(gg));
  std::vector<VecPoly> images;
  bool t_maps_into_m = true;
  for (const auto& f : tgens) {
    auto c = g_basis.lift(VecPoly({f}));
    if (!c) {
      t_maps_into_m = false;
      break;
    }
    images.push_back(VecPoly(std::move(*c)));
  }

  // The relations of N must be exactly those of M plus the torsion images.
  bool n_relations_consistent = false;
  if (t_maps_into_m && !gg.empty()) {
    std::vector<VecPoly> combined = M.relations().generators();
    for (const auto& im : images) combined.push_back(im);
    Submodule rhs(ring, gg.size(), std::move(combined));
    n_relations_consistent = submodule_equal(N.relations(), rhs);
  }
  if (!t_maps_into_m || (!gg.empty() && !n_relations_consistent))
    throw CheckError("conormal presentations failed exact-sequence audit");

  return ConormalData{h,
                      g,
                      std::move(squares_plus_h),
                      std::move(integral),
                      p,
                      n,
                      n - p,
                      std::move(pr.derivations),
                      std::move(M),
                      std::move(T),
                      std::move(N),
                      t_maps_into_m,
                      n_relations_consistent};
}

// Coefficient matrix of h against the given generators of g, modulo g.
//
// Each h_i is written as sum_j b_ij g_j plus an element of g^2, and the
// b_ij are reduced to normal form modulo g (the congruence determines
// them only up to g).  Columns vanishing entirely are dropped; t counts
// the surviving ones.  Two structural bounds are reported:
//
//   column_bound_ok:  t >= p whenever the Jacobian condition holds;
//   torsion_bound_ok: if every surviving column's g_j lies in the
//                     primitive ideal (so its class in the conormal
//                     module is torsion), then t <= p.
//
// Violations are reported through the flags rather than thrown, so a
// caller can surface a hypothesis failure to the user.
struct BMatrixData {
  long p;
  long n;
  PolyMatrix full;     // p x n, entries reduced modulo g
  std::vector<std::size_t> kept_cols;
  PolyMatrix block;    // p x t, the surviving columns
  long t;
  bool jacobian_ok;
  bool column_bound_ok;
  long torsion_columns;
  bool all_kept_torsion;
  bool torsion_bound_ok;
  std::optional<Polynomial> det_b;  // det of the block when t = p, reduced mod g
  bool det_is_nonzerodivisor;
};

inline BMatrixData extract_b_matrix(const Ideal& h, const Ideal& g) {
  require_same_ring(h.ring(), g.ring());
  const RingPtr& ring = h.ring();
  long n = codimension(g);
  if (n != static_cast<long>(g.generators().size()))
    throw NotCompleteIntersectionError(
        "g has " + std::to_string(g.generators().size()) +
        " generators but codimension " + std::to_string(n));
  for (const auto& f : h.generators())
    if (!g.contains(f)) throw NotContainedError("h is not contained in g");

  const auto& gg = g.generators();
  const auto& hh = h.generators();
  std::size_t p = hh.size();
  Ideal squares = ideal_power(g, 2);

  std::vector<VecPoly> columns = detail::wrap1(gg);
  for (const auto& q : squares.generators()) columns.push_back(VecPoly({q}));
  AugmentedBasis lifter(ring, 1, columns);

  PolyMatrix full(ring, p, gg.size());
  for (std::size_t i = 0; i < p; ++i) {
    auto c = lifter.lift(VecPoly({hh[i]}));
    if (!c) throw CheckError("failed to express a generator of h inside g");
    Polynomial acc = hh[i];
    for (std::size_t j = 0; j < gg.size(); ++j) {
      full.at(i, j) = g.normal_form((*c)[j]);
      acc -= full.at(i, j) * gg[j];
    }
    if (!squares.contains(acc))
      throw CheckError("coefficient matrix fails its congruence audit");
  }

  std::vector<std::size_t> kept;
  for (std::size_t j = 0; j < gg.size(); ++j) {
    bool live = false;
    for (std::size_t i = 0; i < p && !live; ++i)
      if (!full.at(i, j).is_zero()) live = true;
    if (live) kept.push_back(j);
  }
  long t = static_cast<long>(kept.size());
  PolyMatrix block(ring, p, kept.size());
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < kept.size(); ++j)
      block.at(i, j) = full.at(i, kept[j]);

  bool jacobian_ok = check_jacobian_condition(h, g);
  bool column_bound_ok = !jacobian_ok || t >= static_cast<long>(p);

  Ideal integral = primitive_ideal(h, g).integral;
  long torsion_columns = 0;
  for (std::size_t j : kept)
    if (integral.contains(gg[j])) ++torsion_columns;
  bool all_kept_torsion = jacobian_ok && torsion_columns == t;
  bool torsion_bound_ok = !all_kept_torsion || t <= static_cast<long>(p);

  std::optional<Polynomial> det_b;
  bool det_is_nonzerodivisor = false;
  if (t == static_cast<long>(p) && p > 0) {
    Polynomial det = g.normal_form(block.det());
    det_is_nonzerodivisor =
        !det.is_zero() && ideal_equal(ideal_quotient_single(g, det), g);
    det_b = std::move(det);
  }

  return BMatrixData{static_cast<long>(p),
                     n,
                     std::move(full),
                     std::move(kept),
                     std::move(block),
                     t,
                     jacobian_ok,
                     column_bound_ok,
                     torsion_columns,
                     all_kept_torsion,
                     torsion_bound_ok,
                     std::move(det_b),
                     det_is_nonzerodivisor};
}

// Torsion number: dim over the ground field of the torsion part T.  When
// a square block with nonzerodivisor determinant b exists, the value has
// the independent form dim O/((b) + g), and the two are cross-checked.
struct TorsionNumber {
  VsDim value;
  bool cross_checked = false;
  VsDim cross_value;
  std::optional<Polynomial> det_b;
};

inline TorsionNumber torsion_number(const Ideal& h, const Ideal& g) {
  ConormalData cd = conormal(h, g);
  TorsionNumber tn;
  tn.value = vs_dimension(cd.T);
  BMatrixData bd = extract_b_matrix(h, g);
  if (bd.t == bd.p && bd.p > 0 && bd.det_is_nonzerodivisor) {
    Ideal cut = ideal_sum(Ideal(g.ring(), {*bd.det_b}), g);
    tn.cross_value = vs_dimension(cut);
    tn.cross_checked = true;
    tn.det_b = bd.det_b;
    if (tn.cross_value != tn.value)
      throw CheckError("torsion number disagrees with its determinant form");
  }
  return tn;
}

// Does the primitive ideal split as (first block) + (second block)^2?
// This is the ideal-theoretic certificate that N is free of rank n - p:
// indices are 1-based positions in the generator list of g, the first
// block must have exactly grade(h) members, and together the blocks must
// use every generator once.  An empty second block is allowed; its
// square is the zero ideal.
struct SplitCheck {
  bool holds;
  Ideal integral;
  Ideal split_form;
};

inline SplitCheck integral_split_check(const Ideal& h, const Ideal& g,
                                       const std::vector<std::size_t>& first,
                                       const std::vector<std::size_t>& second) {
  require_same_ring(h.ring(), g.ring());
  const auto& gg = g.generators();
  long p = codimension(h);
  if (p != static_cast<long>(h.generators().size()))
    throw NotCompleteIntersectionError(
        "h has " + std::to_string(h.generators().size()) +
        " generators but codimension " + std::to_string(p));
  std::vector<char> used(gg.size(), 0);
  auto take = [&](const std::vector<std::size_t>& block) {
    std::vector<Polynomial> fs;
    for (std::size_t ix : block) {
      if (ix < 1 || ix > gg.size()) throw BadSplitError("split index out of range");
      if (used[ix - 1]) throw BadSplitError("split index used twice");
      used[ix - 1] = 1;
      fs.push_back(gg[ix - 1]);
    }
    return fs;
  };
  std::vector<Polynomial> head = take(first);
  std::vector<Polynomial> tail = take(second);
  for (char u : used)
    if (!u) throw BadSplitError("split does not cover every generator of g");
  if (static_cast<long>(head.size()) != p)
    throw BadSplitError("first block must have exactly " + std::to_string(p) +
                        " generators");

  Ideal integral = primitive_ideal(h, g).integral;
  Ideal split_form = ideal_sum(Ideal(g.ring(), std::move(head)),
                               ideal_power(Ideal(g.ring(), std::move(tail)), 2));
  bool holds = ideal_equal(integral, split_form);
  return SplitCheck{holds, std::move(integral), std::move(split_form)};
}

inline SplitCheck main_theorem_check(const Ideal& h, const Ideal& g,
                                     const std::vector<std::size_t>& first,
                                     const std::vector<std::size_t>& second) {
  return integral_split_check(h, g, first, second);
}

}  // namespace primal
