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
};
}  // namespace

TEST_CASE("conormal data of the cusp curve") {
  CuspCurve c;
  ConormalData cd = conormal(c.h, c.g);
  CHECK(cd.p == 1);
  CHECK(cd.n == 2);
  CHECK(cd.rank_target == 1);
  CHECK(vs_dimension(cd.T) == VsDim(3));
  CHECK(cd.t_maps_into_m);
  CHECK(cd.n_relations_consistent);
}

TEST_CASE("torsion submodule vanishes iff the primitive ideal collapses") {
  CuspCurve c;
  ConormalData cd = conormal(c.h, c.g);
  // T = integral / (g^2 + h) is nonzero here
  CHECK(vs_dimension(cd.T) != VsDim(0));
  // over h = g the denominator g^2 + h is g itself, so T vanishes
  ConormalData trivial = conormal(I(c.r, {"x^2 + y^3", "z"}),
                                  I(c.r, {"x^2 + y^3", "z"}));
  CHECK(vs_dimension(trivial.T) == VsDim(0));
}

TEST_CASE("coefficient matrix for the given generators of g") {
  CuspCurve c;
  BMatrixData bm = extract_b_matrix(c.h, c.g);
  CHECK(bm.p == 1);
  CHECK(bm.n == 2);
  REQUIRE(bm.full.rows() == 1);
  REQUIRE(bm.full.cols() == 2);
  CHECK(bm.full.at(0, 0) == P(c.r, "x"));
  CHECK(bm.full.at(0, 1) == P(c.r, "2*x^2"));
  CHECK(bm.t == 2);
  CHECK(bm.jacobian_ok);
  CHECK(bm.column_bound_ok);  // t = 2 >= p = 1
  CHECK(!bm.det_b.has_value());
}

TEST_CASE("adapted generators shrink the coefficient matrix to one column") {
  CuspCurve c;
  BMatrixData bm = extract_b_matrix(c.h, c.gsplit);
  REQUIRE(bm.kept_cols.size() == 1);
  CHECK(bm.kept_cols[0] == 0);
  CHECK(bm.t == 1);
  REQUIRE(bm.det_b.has_value());
  CHECK(*bm.det_b == P(c.r, "x"));
  CHECK(bm.det_is_nonzerodivisor);
  CHECK(bm.all_kept_torsion);
  CHECK(bm.torsion_bound_ok);  // t = 1 <= p = 1
}

TEST_CASE("two-lines coefficient matrix keeps both columns") {
  TwoLines t;
  BMatrixData bm = extract_b_matrix(t.h, t.g);
  CHECK(bm.p == 1);
  CHECK(bm.t == 2);
  CHECK(bm.column_bound_ok);
  CHECK(bm.full.at(0, 0) == P(t.r, "x"));
  CHECK(bm.full.at(0, 1) == t.g.normal_form(P(t.r, "y + z")));
}

TEST_CASE("torsion numbers with determinant cross-check") {
  CuspCurve c;
  TorsionNumber tn = torsion_number(c.h, c.gsplit);
  CHECK(tn.value == VsDim(3));
  CHECK(tn.cross_checked);
  CHECK(tn.cross_value == VsDim(3));
  REQUIRE(tn.det_b.has_value());
  CHECK(*tn.det_b == P(c.r, "x"));

  // same number through the original generators, without the determinant
  TorsionNumber orig = torsion_number(c.h, c.g);
  CHECK(orig.value == VsDim(3));

  TwoLines t;
  CHECK(torsion_number(t.h, t.g).value == VsDim(1));
}

TEST_CASE("freeness verdicts for the conormal quotient N") {
  CuspCurve c;
  ConormalData cd = conormal(c.h, c.g);
  FreenessCheck fc = is_locally_free(cd.N, cd.rank_target);
  CHECK(fc.locally_free);
  CHECK(fc.rank == 1);
  CHECK(fc.generated_ok);
  CHECK(fc.minors_vanish);
  CHECK(!fc.witness.has_value());

  TwoLines t;
  ConormalData td = conormal(t.h, t.g);
  FreenessCheck tf = is_locally_free(td.N, td.rank_target);
  CHECK(!tf.locally_free);
  CHECK(!tf.generated_ok);
  REQUIRE(tf.witness.has_value());
  CHECK(ideal_equal(*tf.witness, I(t.r, {"x", "y", "z"})));
}

TEST_CASE("split form of the primitive ideal") {
  CuspCurve c;
  SplitCheck sc = integral_split_check(c.h, c.gsplit, {1}, {2});
  CHECK(sc.holds);
  CHECK(ideal_equal(sc.split_form,
                    I(c.r, {"x^2 + y^3 + 2*x*z + z^2", "z^2"})));
  CHECK(main_theorem_check(c.h, c.gsplit, {1}, {2}).holds);
  // the unadapted generators do not split
  CHECK(!integral_split_check(c.h, c.g, {1}, {2}).holds);

  TwoLines t;
  CHECK(!integral_split_check(t.h, t.g, {1}, {2}).holds);
}

TEST_CASE("split validation rejects malformed block choices") {
  CuspCurve c;
  CHECK_THROWS_AS(integral_split_check(c.h, c.gsplit, {1, 2}, {}),
                  BadSplitError);  // first block must have p = 1 elements
  CHECK_THROWS_AS(integral_split_check(c.h, c.gsplit, {1}, {1}),
                  BadSplitError);  // index used twice
  CHECK_THROWS_AS(integral_split_check(c.h, c.gsplit, {1}, {3}),
                  BadSplitError);  // out of range
  CHECK_THROWS_AS(integral_split_check(c.h, c.gsplit, {1}, {}),
                  BadSplitError);  // generator 2 not covered
  CHECK_THROWS_AS(integral_split_check(c.h, c.gsplit, {0}, {2}),
                  BadSplitError);  // indices are 1-based
}

TEST_CASE("empty second block squares to the zero ideal") {
  auto r = make_ring({"x", "y"});
  Ideal h = I(r, {"x^2 + y^3"});
  SplitCheck sc = integral_split_check(h, h, {1}, {});
  CHECK(sc.holds);  // integral of h in h is h = (first block) + (0)
}

TEST_CASE("conormal hypotheses are enforced") {
  auto r = make_ring({"x", "y", "z"});
  CHECK_THROWS_AS(conormal(I(r, {"x*y", "z"}), I(r, {"x", "y", "x + y"})),
                  NotCompleteIntersectionError);
  CHECK_THROWS_AS(conormal(I(r, {"y^2", "z"}), I(r, {"y", "z"})),
                  JacobianConditionError);
  CHECK_THROWS_AS(extract_b_matrix(I(r, {"x"}), I(r, {"y", "z"})),
                  NotContainedError);
}
