#pragma once

#include <gmpxx.h>

#include <string>

#include "primal/errors.hpp"

namespace primal {

// Exact rational number.  Always kept in lowest terms with a positive
// denominator; zero is canonically 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  Rational(long n, long d) {
    if (d == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  // Both strings are sequences of decimal digits (numerator may carry a
  // leading '-'); used by the parser so literals of any size are exact.
  static Rational from_strings(const std::string& num, const std::string& den) {
    mpz_class n(num), d(den);
    if (d == 0) throw Error("rational with zero denominator");
    Rational r;
    r.v_ = mpq_class(n) / mpq_class(d);
    return r;
  }
  static Rational from_string(const std::string& num) {
    Rational r;
    r.v_ = mpq_class(mpz_class(num));
    return r;
  }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return wrap(-v_); }
  Rational operator+(const Rational& o) const { return wrap(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return wrap(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return wrap(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw Error("rational division by zero");
    return wrap(v_ / o.v_);
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  Rational inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return wrap(1 / v_);
  }
  Rational abs() const { return wrap(::abs(v_)); }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }
  bool operator<=(const Rational& o) const { return v_ <= o.v_; }
  bool operator>(const Rational& o) const { return v_ > o.v_; }
  bool operator>=(const Rational& o) const { return v_ >= o.v_; }

  // "n" when the denominator is 1, otherwise "n/d".
  std::string str() const { return v_.get_str(); }

 private:
  static Rational wrap(mpq_class q) {
    Rational r;
    r.v_ = std::move(q);
    return r;
  }
  mpq_class v_;
};

}  // namespace primal
