#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "primal/conormal.hpp"
#include "primal/unipoly.hpp"

namespace primal {

// Coordinate frame of a line: g must equal the ideal of all variables
// except one; that one parametrizes the line.
struct LineFrame {
  std::size_t line_var;
  std::vector<std::size_t> normal_vars;  // the other variables, in ring order
};

inline LineFrame line_frame(const Ideal& g) {
  const RingPtr& ring = g.ring();
  for (std::size_t v = 0; v < ring->nvars(); ++v) {
    std::vector<Polynomial> coords;
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < ring->nvars(); ++j) {
      if (j == v) continue;
      coords.push_back(Polynomial::variable(ring, j));
      others.push_back(j);
    }
    if (others.empty()) continue;
    if (ideal_equal(g, Ideal(ring, std::move(coords))))
      return LineFrame{v, std::move(others)};
  }
  throw NotALineCaseError("g is not the coordinate ideal of a line");
}

inline UniPoly to_unipoly(const Polynomial& f, std::size_t var) {
  std::vector<Rational> cs;
  for (const auto& [mono, coef] : f.terms()) {
    for (std::size_t j = 0; j < mono.size(); ++j)
      if (j != var && mono[j] != 0)
        throw Error("polynomial is not univariate in the line coordinate");
    std::size_t e = static_cast<std::size_t>(mono[var]);
    if (cs.size() < e + 1) cs.resize(e + 1, Rational());
    cs[e] = coef;
  }
  return UniPoly(std::move(cs));
}

inline Polynomial from_unipoly(const RingPtr& ring, std::size_t var,
                               const UniPoly& f) {
  Polynomial out = Polynomial::zero(ring);
  for (long i = 0; i <= f.degree(); ++i) {
    Rational c = f.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    out = out + Polynomial::term(
                    ring, Monomial::var(ring->nvars(), var,
                                        static_cast<int>(i)),
                    c);
  }
  return out;
}

// Normalization of h along the line: coordinates are changed (linearly in
// the normal variables, with coefficients from the line's coordinate ring)
// and the generators mixed until h~_i == b_i y_i mod g^2, with y_i the
// i-th normal variable in ring order and b_i univariate in the line
// coordinate.  The b_i come out of a Smith normal form, so they are monic
// and each divides the next.
//
// lambda = sum of the valuations l_i measures the torsion concentrated at
// the origin of the line; the degree sum is the same count over the whole
// line.  The two agree exactly when every b_i is the monomial x^{l_i},
// reported as concentrated_at_origin.
struct LineCaseData {
  long p;
  long n;
  std::size_t line_var;
  std::vector<std::size_t> normal_vars;
  std::vector<Polynomial> h_tilde;
  std::vector<UniPoly> b;
  std::vector<long> l;
  long lambda;              // sum of the l_i
  long global_torsion;      // sum of the degrees of the b_i
  bool concentrated_at_origin;
  Ideal normalized_integral;  // primitive ideal of the normalized pair
  Ideal split_form;           // (y_1..y_p) + (y_{p+1}..y_n)^2
  bool split_formula_ok;
};

inline LineCaseData line_normalize(const Ideal& h, const Ideal& g) {
  require_same_ring(h.ring(), g.ring());
  const RingPtr& ring = h.ring();
  LineFrame frame = line_frame(g);
  const auto& hh = h.generators();
  std::size_t p = hh.size();
  std::size_t n = frame.normal_vars.size();

  std::vector<Polynomial> coords;
  coords.reserve(n);
  for (std::size_t j : frame.normal_vars)
    coords.push_back(Polynomial::variable(ring, j));
  Ideal gcoord(ring, coords);
  for (const auto& f : hh)
    if (!gcoord.contains(f))
      throw NotALineCaseError("h does not vanish on the line");
  Ideal squares = ideal_power(gcoord, 2);

  std::vector<VecPoly> columns = detail::wrap1(coords);
  for (const auto& q : squares.generators()) columns.push_back(VecPoly({q}));
  AugmentedBasis lifter(ring, 1, columns);

  UniMat B(p, std::vector<UniPoly>(n));
  for (std::size_t i = 0; i < p; ++i) {
    auto c = lifter.lift(VecPoly({hh[i]}));
    if (!c) throw CheckError("failed to express a generator of h inside g");
    Polynomial acc = hh[i];
    for (std::size_t j = 0; j < n; ++j) {
      Polynomial entry = gcoord.normal_form((*c)[j]);
      acc -= entry * coords[j];
      B[i][j] = to_unipoly(entry, frame.line_var);
    }
    if (!squares.contains(acc))
      throw CheckError("line coefficient matrix fails its congruence audit");
  }

  SmithForm sf = smith_normal_form(B);
  std::vector<UniPoly> b;
  std::vector<long> l;
  for (std::size_t i = 0; i < p; ++i) {
    if (i >= sf.diagonal.size() || sf.diagonal[i].is_zero())
      throw NotICISError("the Jacobian of h vanishes along the line");
    b.push_back(sf.diagonal[i]);
    l.push_back(*sf.diagonal[i].valuation());
  }

  // y_old = V y_new, applied as one simultaneous substitution; then the
  // rows are mixed by U.
  std::vector<std::pair<std::size_t, Polynomial>> subs;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial img = Polynomial::zero(ring);
    for (std::size_t m = 0; m < n; ++m) {
      if (sf.v[j][m].is_zero()) continue;
      img = img + from_unipoly(ring, frame.line_var, sf.v[j][m]) *
                      Polynomial::variable(ring, frame.normal_vars[m]);
    }
    subs.emplace_back(frame.normal_vars[j], std::move(img));
  }
  std::vector<Polynomial> hsub;
  hsub.reserve(p);
  for (const auto& f : hh) hsub.push_back(f.substitute_many(subs));
  std::vector<Polynomial> h_tilde;
  h_tilde.reserve(p);
  for (std::size_t i = 0; i < p; ++i) {
    Polynomial mixed = Polynomial::zero(ring);
    for (std::size_t j = 0; j < p; ++j) {
      if (sf.u[i][j].is_zero()) continue;
      mixed = mixed + from_unipoly(ring, frame.line_var, sf.u[i][j]) * hsub[j];
    }
    h_tilde.push_back(std::move(mixed));
  }

  for (std::size_t i = 0; i < p; ++i) {
    Polynomial expect =
        from_unipoly(ring, frame.line_var, b[i]) * coords[i];
    if (!squares.contains(h_tilde[i] - expect))
      throw CheckError("normalized generator fails its diagonal congruence");
  }

  Ideal h_norm(ring, h_tilde);
  Ideal integral = primitive_ideal(h_norm, gcoord).integral;
  std::vector<Polynomial> head(coords.begin(),
                               coords.begin() + static_cast<long>(p));
  std::vector<Polynomial> tail(coords.begin() + static_cast<long>(p),
                               coords.end());
  Ideal split_form = ideal_sum(Ideal(ring, std::move(head)),
                               ideal_power(Ideal(ring, std::move(tail)), 2));
  bool split_ok = ideal_equal(integral, split_form);
  if (!split_ok)
    throw CheckError("normalized primitive ideal is not in split form");

  long lambda = 0, global = 0;
  bool concentrated = true;
  for (std::size_t i = 0; i < p; ++i) {
    lambda += l[i];
    global += b[i].degree();
    if (b[i].degree() != l[i]) concentrated = false;
  }

  return LineCaseData{static_cast<long>(p),
                      static_cast<long>(n),
                      frame.line_var,
                      frame.normal_vars,
                      std::move(h_tilde),
                      std::move(b),
                      std::move(l),
                      lambda,
                      global,
                      concentrated,
                      std::move(integral),
                      std::move(split_form),
                      split_ok};
}

// dim of O^p / (th(h) + g O^p), where th(h) is spanned by the columns of
// the transposed Jacobian of h.  Counted over the whole line, so it
// matches the torsion number; INFINITE when the Jacobian drops rank along
// the line.
inline VsDim lambda_tilde(const Ideal& h, const Ideal& g) {
  require_same_ring(h.ring(), g.ring());
  const RingPtr& ring = h.ring();
  LineFrame frame = line_frame(g);
  std::vector<Polynomial> coords;
  for (std::size_t j : frame.normal_vars)
    coords.push_back(Polynomial::variable(ring, j));
  Ideal gcoord(ring, std::move(coords));
  const auto& hh = h.generators();
  for (const auto& f : hh)
    if (!gcoord.contains(f))
      throw NotALineCaseError("h does not vanish on the line");
  std::size_t p = hh.size();
  if (p == 0) return VsDim(0);

  std::vector<VecPoly> rels;
  for (std::size_t j = 0; j < ring->nvars(); ++j) {
    std::vector<Polynomial> col;
    col.reserve(p);
    for (std::size_t i = 0; i < p; ++i) col.push_back(hh[i].derivative(j));
    rels.push_back(VecPoly(std::move(col)));
  }
  auto pres = ModulePresentation::make(ring, p, std::move(rels), gcoord);
  return vs_dimension(pres);
}

// The restriction of the differentials of X to the line, presented as the
// cokernel of the transposed Jacobian with entries reduced to the line's
// coordinate ring, and decomposed by its Smith normal form.  The proof of
// the splitting gives free rank 1 + (n - p); the torsion dimension equals
// the degree-sum torsion of the normalization, and equals lambda itself
// exactly when the torsion concentrates at the origin.
struct OmegaLineReport {
  long p;
  long n;
  std::vector<UniPoly> diagonal;
  long torsion_dim;
  long free_rank;
  bool torsion_matches_lambda;
  LineCaseData line;
};

inline OmegaLineReport omega_line(const Ideal& h, const Ideal& g) {
  LineCaseData lcd = line_normalize(h, g);
  const RingPtr& ring = h.ring();
  std::vector<Polynomial> coords;
  for (std::size_t j : lcd.normal_vars)
    coords.push_back(Polynomial::variable(ring, j));
  Ideal gcoord(ring, std::move(coords));

  const auto& hh = h.generators();
  std::size_t p = hh.size();
  std::size_t rows = ring->nvars();
  UniMat W(rows, std::vector<UniPoly>(p));
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t i = 0; i < p; ++i)
      W[j][i] =
          to_unipoly(gcoord.normal_form(hh[i].derivative(j)), lcd.line_var);

  SmithForm sf = smith_normal_form(W);
  long rank = 0, torsion = 0;
  for (const auto& d : sf.diagonal) {
    if (d.is_zero()) continue;
    ++rank;
    torsion += d.degree();
  }
  long free_rank = static_cast<long>(rows) - rank;

  if (rank != lcd.p)
    throw CheckError("differential matrix rank disagrees with the normalization");
  if (torsion != lcd.global_torsion)
    throw CheckError("differential torsion disagrees with the normalization");
  if (free_rank != 1 + (lcd.n - lcd.p))
    throw CheckError("differential free rank disagrees with the splitting");

  return OmegaLineReport{lcd.p,
                         lcd.n,
                         sf.diagonal,
                         torsion,
                         free_rank,
                         torsion == lcd.lambda,
                         std::move(lcd)};
}

}  // namespace primal
