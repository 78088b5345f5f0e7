#include <catch2/catch_amalgamated.hpp>

#include "primal/primal.hpp"

using namespace primal;

namespace {
Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(s, r);
}
Ideal I(const RingPtr& r, std::initializer_list<std::string> gens) {
  std::vector<Polynomial> v;
  for (const auto& s : gens) v.push_back(P(r, s));
  return Ideal(r, std::move(v));
}

struct CuspCurve {
  RingPtr r = make_ring({"x", "y", "z"});
  Ideal h = I(r, {"x^3 + x*y^3 + 2*x^2*z + 2*z^2"});
  Ideal g = I(r, {"x^2 + y^3", "z"});
  Ideal gsplit = I(r, {"x^2 + y^3 + 2*x*z + z^2", "z"});
};

struct TwoLines {
  RingPtr r = make_ring({"x", "y", "z"});
  Ideal h = I(r, {"x^2*y + y*z + z^2"});
  Ideal g = I(r, {"x*y", "z"});
  Ideal g1 = I(r, {"x", "z"});
  Ideal g2 = I(r, {"y", "z"});
};
}  // namespace

TEST_CASE("primitive ideal of the cusp curve") {
  CuspCurve c;
  PrimitiveResult pr = primitive_ideal(c.h, c.g);
  CHECK(ideal_equal(pr.integral, I(c.r, {"x^2 + y^3 + 2*x*z", "z^2"})));
  // the defining property, checked from scratch
  for (const auto& f : pr.integral.groebner())
    for (const auto& xi : log_derivations(c.h))
      CHECK(c.g.contains(xi.apply(f)));
  // independent of the generating set of g
  CHECK(ideal_equal(primitive_ideal(c.h, c.gsplit).integral, pr.integral));
}

TEST_CASE("primitive ideal of the two coordinate lines") {
  TwoLines t;
  PrimitiveResult pr = primitive_ideal(t.h, t.g);
  CHECK(ideal_equal(pr.integral, I(t.r, {"x^2*y", "y*z", "z^2"})));
}

TEST_CASE("containment chain around the primitive ideal") {
  CuspCurve c;
  TwoLines t;
  for (auto [h, g] : {std::pair{c.h, c.g}, {c.h, c.gsplit}, {t.h, t.g},
                      {t.h, t.g1}, {t.h, t.g2}}) {
    Ideal integral = primitive_ideal(h, g).integral;
    CHECK(integral.contains(ideal_sum(h, ideal_power(g, 2))));
    CHECK(g.contains(integral));
  }
}

TEST_CASE("primitive ideal distributes over an intersection of curves") {
  TwoLines t;
  Ideal lhs = primitive_ideal(t.h, ideal_intersect(t.g1, t.g2)).integral;
  Ideal rhs = ideal_intersect(primitive_ideal(t.h, t.g1).integral,
                              primitive_ideal(t.h, t.g2).integral);
  CHECK(ideal_equal(lhs, rhs));
  CHECK(ideal_equal(primitive_ideal(t.h, t.g1).integral, I(t.r, {"x^2", "z"})));
  CHECK(ideal_equal(primitive_ideal(t.h, t.g2).integral, I(t.r, {"y", "z^2"})));
}

TEST_CASE("property report covers both containments and the intersection") {
  TwoLines t;
  PropertyReport rep = verify_primitive_properties(
      t.h, t.g, std::make_pair(t.g1, t.g2));
  CHECK(rep.lower);
  CHECK(rep.upper);
  REQUIRE(rep.intersection.has_value());
  CHECK(*rep.intersection);
  PropertyReport bare = verify_primitive_properties(t.h, t.g, std::nullopt);
  CHECK(bare.lower);
  CHECK(bare.upper);
  CHECK(!bare.intersection.has_value());
}

TEST_CASE("primitive ideal of h inside h is h itself") {
  auto r = make_ring({"x", "y", "z"});
  for (auto h : {I(r, {"x^2 + y^3", "z"}), I(r, {"x*y", "z"}),
                 I(r, {"x^3 - y*z"})}) {
    CHECK(ideal_equal(primitive_ideal(h, h).integral, h));
  }
}

TEST_CASE("primitive ideal over the zero ideal is the square") {
  auto r = make_ring({"x", "y"});
  Ideal m = I(r, {"x", "y"});
  CHECK(ideal_equal(primitive_ideal(Ideal::zero(r), m).integral,
                    ideal_power(m, 2)));
}

TEST_CASE("second symbolic power of the cusp curve") {
  CuspCurve c;
  std::vector<Polynomial> sp = symbolic_power_2(c.h, c.g);
  Ideal back = ideal_sum(Ideal(c.r, sp), c.h);
  CHECK(ideal_equal(back, I(c.r, {"x^2 + y^3 + 2*x*z", "z^2",
                                  "x^3 + x*y^3 + 2*x^2*z + 2*z^2"})));
  // classes are already reduced modulo h
  for (const auto& f : sp) CHECK(f == c.h.normal_form(f));
}

TEST_CASE("hypothesis guards") {
  auto r = make_ring({"x", "y"});
  CHECK_THROWS_AS(primitive_ideal(I(r, {"x"}), I(r, {"y"})),
                  NotContainedError);
  CHECK_THROWS_AS(symbolic_power_2(I(r, {"y^2"}), I(r, {"y"})),
                  JacobianConditionError);
}
