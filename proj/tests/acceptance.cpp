// Acceptance gate: every published value the library must reproduce, one
// line per criterion.  Usage: acceptance <primctl-binary> <sessions-dir>
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "primal/primal.hpp"

using namespace primal;

namespace {

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (") + e.what() + ")";
  }
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ": " << label << note
            << "\n";
  if (!ok) ++failures;
}

Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(s, r);
}
Ideal I(const RingPtr& r, std::initializer_list<std::string> gens) {
  std::vector<Polynomial> v;
  for (const auto& s : gens) v.push_back(P(r, s));
  return Ideal(r, std::move(v));
}

// Pairs whose primitive ideals feed the definitional audit of criterion 6.
std::vector<std::pair<Ideal, Ideal>> audit_suite;

bool definitional_audit(const Ideal& h, const Ideal& g) {
  Ideal integral = primitive_ideal(h, g).integral;
  for (const auto& f : integral.groebner())
    for (const auto& xi : log_derivations(h))
      if (!g.contains(xi.apply(f))) return false;
  if (!integral.contains(ideal_sum(h, ideal_power(g, 2)))) return false;
  if (!g.contains(integral)) return false;
  return true;
}

// Random triangular complete intersections: staircase-shaped generators
// keep the codimension equal to the number of generators.
Ideal random_ci(const RingPtr& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> expo(1, 3), coef(-3, 3), count(1, 3);
  std::size_t m = r->nvars();
  std::size_t k = static_cast<std::size_t>(count(rng));
  if (k > m) k = m;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < k; ++i) {
    // leading pure power in variable i plus terms in later variables
    Polynomial f = Polynomial::variable(r, i).pow(
        static_cast<unsigned>(expo(rng)));
    for (std::size_t j = i + 1; j < m; ++j) {
      int c = coef(rng);
      if (c == 0) continue;
      f += Polynomial::constant(r, Rational(c)) *
           Polynomial::variable(r, j).pow(static_cast<unsigned>(expo(rng)));
    }
    gens.push_back(f);
  }
  return Ideal(r, std::move(gens));
}

// Terms of total degree at most 3.
Polynomial random_poly(const RingPtr& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 3), deg(0, 3), num(-4, 4);
  std::uniform_int_distribution<std::size_t> var(0, r->nvars() - 1);
  Polynomial f = Polynomial::zero(r);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<int> e(r->nvars(), 0);
    int d = deg(rng);
    for (int s = 0; s < d; ++s) ++e[var(rng)];
    f = f + Polynomial::term(r, Monomial(std::move(e)), Rational(num(rng)));
  }
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <primctl-binary> <sessions-dir>\n";
    return 2;
  }
  const std::string primctl = argv[1];
  const std::string sessions = argv[2];

  RingPtr r3 = make_ring({"x", "y", "z"});
  Ideal cusp_h = I(r3, {"x^3 + x*y^3 + 2*x^2*z + 2*z^2"});
  Ideal cusp_g = I(r3, {"x^2 + y^3", "z"});
  Ideal cusp_gsplit = I(r3, {"x^2 + y^3 + 2*x*z + z^2", "z"});
  Ideal lines_h = I(r3, {"x^2*y + y*z + z^2"});
  Ideal lines_g = I(r3, {"x*y", "z"});
  Ideal lines_g1 = I(r3, {"x", "z"});
  Ideal lines_g2 = I(r3, {"y", "z"});
  RingPtr r2 = make_ring({"x", "y"});

  audit_suite = {{cusp_h, cusp_g},   {cusp_h, cusp_gsplit},
                 {lines_h, lines_g}, {lines_h, lines_g1},
                 {lines_h, lines_g2}};

  criterion(1, "cusp curve: golden primitive ideal, split form, free rank 1",
            [&] {
    Ideal expected = I(r3, {"x^2 + y^3 + 2*x*z", "z^2"});
    if (!ideal_equal(primitive_ideal(cusp_h, cusp_g).integral, expected))
      return false;
    if (!ideal_equal(primitive_ideal(cusp_h, cusp_gsplit).integral, expected))
      return false;
    if (!main_theorem_check(cusp_h, cusp_gsplit, {1}, {2}).holds) return false;
    ConormalData cd = conormal(cusp_h, cusp_g);
    FreenessCheck fc = is_locally_free(cd.N, cd.rank_target);
    return fc.locally_free && fc.rank == 1;
  });

  criterion(2, "two lines: golden primitive ideal, torsion 1, not free",
            [&] {
    if (!ideal_equal(primitive_ideal(lines_h, lines_g).integral,
                     I(r3, {"x^2*y", "y*z", "z^2"})))
      return false;
    if (torsion_number(lines_h, lines_g).value != VsDim(1)) return false;
    ConormalData cd = conormal(lines_h, lines_g);
    return !is_locally_free(cd.N, cd.rank_target).locally_free;
  });

  criterion(3, "component lines: two golden restrictions and the intersection",
            [&] {
    if (!ideal_equal(primitive_ideal(lines_h, lines_g1).integral,
                     I(r3, {"x^2", "z"})))
      return false;
    if (!ideal_equal(primitive_ideal(lines_h, lines_g2).integral,
                     I(r3, {"y", "z^2"})))
      return false;
    Ideal lhs =
        primitive_ideal(lines_h, ideal_intersect(lines_g1, lines_g2)).integral;
    Ideal rhs = ideal_intersect(primitive_ideal(lines_h, lines_g1).integral,
                                primitive_ideal(lines_h, lines_g2).integral);
    return ideal_equal(lhs, rhs);
  });

  criterion(4, "torsion number 3 from the module and from det b = x", [&] {
    TorsionNumber tn = torsion_number(cusp_h, cusp_gsplit);
    if (tn.value != VsDim(3)) return false;
    if (!tn.cross_checked || tn.cross_value != VsDim(3)) return false;
    return tn.det_b.has_value() && *tn.det_b == P(r3, "x");
  });

  criterion(5, "plane curve family: three pipelines give k, omega confirms",
            [&] {
    Ideal g = I(r2, {"y"});
    for (int k = 1; k <= 5; ++k) {
      Ideal h(r2, {P(r2, "x^" + std::to_string(k) + "*y + y^3")});
      audit_suite.emplace_back(h, g);
      if (torsion_number(h, g).value != VsDim(k)) return false;
      if (lambda_tilde(h, g) != VsDim(k)) return false;
      LineCaseData lcd = line_normalize(h, g);
      if (lcd.lambda != k) return false;
      OmegaLineReport om = omega_line(h, g);
      if (om.torsion_dim != k || om.free_rank != 1) return false;
    }
    return true;
  });

  criterion(6, "definitional audit on every primitive ideal in the suite",
            [&] {
    for (const auto& [h, g] : audit_suite)
      if (!definitional_audit(h, g)) return false;
    return true;
  });

  criterion(7, "trivial cases: fixed points, zero equations, smooth pair",
            [&] {
    std::mt19937 rng(20260814);
    for (int trial = 0; trial < 10; ++trial) {
      Ideal h = random_ci(r3, rng);
      if (!ideal_equal(primitive_ideal(h, h).integral, h)) return false;
    }
    Ideal m = I(r2, {"x", "y"});
    if (!ideal_equal(primitive_ideal(Ideal::zero(r2), m).integral,
                     ideal_power(m, 2)))
      return false;
    Ideal smooth = I(r2, {"y"});
    return torsion_number(smooth, smooth).value == VsDim(0);
  });

  criterion(8, "engine properties on 100 random ideals", [&] {
    std::mt19937 rng(12345);
    MonomialOrder ord = MonomialOrder::degrevlex();
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Polynomial> gens;
      int k = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < k; ++i) gens.push_back(random_poly(r3, rng));
      Ideal a(r3, gens);
      auto gb = a.groebner(ord);
      for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
          auto [mi, ci] = gb[i].leading(ord);
          auto [mj, cj] = gb[j].leading(ord);
          Monomial l = Monomial::lcm(mi, mj);
          Polynomial s =
              gb[i] * Polynomial::term(r3, l.divide(mi), Rational(1) / ci) -
              gb[j] * Polynomial::term(r3, l.divide(mj), Rational(1) / cj);
          if (!poly_normal_form(s, gb, ord).is_zero()) return false;
        }

      Polynomial f = random_poly(r3, rng);
      Polynomial nf = a.normal_form(f);
      if (a.normal_form(nf) != nf) return false;

      Ideal b(r3, {random_poly(r3, rng), random_poly(r3, rng)});
      Ideal prod = ideal_product(a, b);
      Ideal cap = ideal_intersect(a, b);
      if (!cap.contains(prod)) return false;
      if (!a.contains(cap)) return false;

      std::vector<VecPoly> wrapped;
      for (const auto& q : gens) wrapped.push_back(VecPoly({q}));
      AugmentedBasis ab(r3, 1, wrapped);
      for (const auto& syz : ab.syzygies()) {
        Polynomial acc = Polynomial::zero(r3);
        for (std::size_t t = 0; t < syz.rank(); ++t) acc += syz[t] * gens[t];
        if (!acc.is_zero()) return false;
      }

      std::shuffle(gens.begin(), gens.end(), rng);
      if (Ideal(r3, gens).groebner(ord) != gb) return false;
    }
    return true;
  });

  criterion(9, "guards: wide coefficient matrix and degenerate exit code",
            [&] {
    BMatrixData bm = extract_b_matrix(lines_h, lines_g);
    if (bm.t != 2 || bm.p != 1 || !bm.column_bound_ok) return false;
    std::string cmd = primctl + " line-case --file " + sessions +
                      "/degenerate_pair.pri --h h --g g > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) && WEXITSTATUS(status) == 1;
  });

  if (failures == 0) std::cout << "all acceptance criteria hold\n";
  return failures == 0 ? 0 : 1;
}
