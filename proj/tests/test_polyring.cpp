#include <catch2/catch_amalgamated.hpp>

#include "primal/primal.hpp"

using namespace primal;

namespace {
RingPtr xyz() { return make_ring({"x", "y", "z"}); }
Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(s, r);
}
}  // namespace

TEST_CASE("rational arithmetic is exact") {
  Rational a(1, 2), b(1, 3);
  CHECK(a + b == Rational(5, 6));
  CHECK(a * b == Rational(1, 6));
  CHECK(a - a == Rational(0));
  CHECK(a / b == Rational(3, 2));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-1, 2) == Rational(1, -2));
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(a / Rational(0), Error);
  CHECK(Rational::from_string("123456789012345678901234567890") ==
        Rational::from_strings("246913578024691357802469135780", "2"));
  CHECK(Rational(3, 6).str() == "1/2");
  CHECK(Rational(-4, 2).str() == "-2");
}

TEST_CASE("monomial operations") {
  Monomial m({2, 1, 0}), n({1, 3, 0});
  CHECK(m.degree() == 3);
  CHECK((m * n) == Monomial({3, 4, 0}));
  CHECK(Monomial::lcm(m, n) == Monomial({2, 3, 0}));
  CHECK(!m.divides(n));
  CHECK(m.divides(Monomial::lcm(m, n)));
  CHECK(Monomial::lcm(m, n).divide(m) == Monomial({0, 2, 0}));
  CHECK(Monomial::coprime(Monomial({1, 0, 0}), Monomial({0, 0, 2})));
  CHECK(!Monomial::coprime(m, n));
  CHECK_THROWS_AS(Monomial({1, -1}), Error);
}

TEST_CASE("degrevlex and lex compare as documented") {
  MonomialOrder dr = MonomialOrder::degrevlex();
  MonomialOrder lx = MonomialOrder::lex();
  Monomial x2y({2, 1, 0}), xz2({1, 0, 2}), y3({0, 3, 0}), x2({2, 0, 0});

  // Same degree: degrevlex prefers the monomial with the smaller last
  // exponent; lex compares the first differing exponent.
  CHECK(dr.less(xz2, x2y));
  CHECK(lx.less(xz2, x2y));
  CHECK(dr.less(x2, y3));  // lower total degree is smaller
  CHECK(lx.less(y3, x2));  // but lex only looks at x first
  CHECK(!dr.less(x2y, x2y));
}

TEST_CASE("polynomial ring arithmetic") {
  auto r = xyz();
  Polynomial f = P(r, "x^2 + y^3"), g = P(r, "z");
  CHECK((f + g) - g == f);
  CHECK(f * g == P(r, "x^2*z + y^3*z"));
  CHECK(f.pow(2) == P(r, "x^4 + 2*x^2*y^3 + y^6"));
  CHECK((f - f).is_zero());
  CHECK(P(r, "(x + y)*(x - y)") == P(r, "x^2 - y^2"));
  CHECK(P(r, "1/2*x + 1/2*x") == P(r, "x"));
  CHECK(f.total_degree() == 3);
  CHECK(Polynomial::zero(r).total_degree() == -1);
}

TEST_CASE("derivatives and substitution") {
  auto r = xyz();
  Polynomial h = P(r, "x^3 + x*y^3 + 2*x^2*z + 2*z^2");
  CHECK(h.derivative(0) == P(r, "3*x^2 + y^3 + 4*x*z"));
  CHECK(h.derivative(1) == P(r, "3*x*y^2"));
  CHECK(h.derivative(2) == P(r, "2*x^2 + 4*z"));
  CHECK(P(r, "x^2*y").substitute(0, P(r, "y + z")) ==
        P(r, "y^3 + 2*y^2*z + y*z^2"));
  // substitute_many is simultaneous, not sequential.
  Polynomial swapped = P(r, "x*y").substitute_many(
      {{0, P(r, "y")}, {1, P(r, "x")}});
  CHECK(swapped == P(r, "x*y"));
  Polynomial rotated = P(r, "x^2 + y").substitute_many(
      {{0, P(r, "y")}, {1, P(r, "z")}});
  CHECK(rotated == P(r, "y^2 + z"));
}

TEST_CASE("canonical printing") {
  auto r = xyz();
  CHECK(P(r, "z^2").str() == "z^2");
  CHECK(P(r, "x^2 + 2*x*z + y^3").str() == "y^3 + x^2 + 2*x*z");
  CHECK(P(r, "y*z").str() == "y*z");
  CHECK(P(r, "x^2*y").str() == "x^2*y");
  CHECK(P(r, "1 - x").str() == "-x + 1");
  CHECK(P(r, "3").str() == "3");
  CHECK(P(r, "0").str() == "0");
  CHECK(P(r, "-1/2*y + x").str() == "x - 1/2*y");
  CHECK(P(r, "x^2 + 2*x*z + y^3").str(MonomialOrder::lex()) ==
        "x^2 + 2*x*z + y^3");
}

TEST_CASE("vector polynomials") {
  auto r = xyz();
  VecPoly v(r, 2);
  v[0] = P(r, "x");
  v[1] = P(r, "y");
  VecPoly w = v.poly_multiple(P(r, "z"));
  CHECK(w[0] == P(r, "x*z"));
  CHECK(w[1] == P(r, "y*z"));
  CHECK((v - v).is_zero());
  auto l = v.lead(MonomialOrder::degrevlex());
  REQUIRE(l.has_value());
  CHECK(l->pos == 0);  // position-over-term: earlier component wins
  CHECK(VecPoly(r, 3).lead(MonomialOrder::degrevlex()) == std::nullopt);
}
