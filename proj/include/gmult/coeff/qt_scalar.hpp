#pragma once

#include <string>

#include "gmult/coeff/laurent.hpp"

namespace gmult::coeff {

// t = q^{-k/2}
struct Specialization {
  int k = 0;
};

// Element of Q(q^{1/m}, t) stored as num/den with v = q^{1/m}.
//
// Canonical form: den is a polynomial (no negative exponents) whose smallest
// v and t exponents are both 0, gcd(num, den) = 1, den has lex-leading
// coefficient 1, and m is the smallest denominator that still represents
// every q exponent. Two equal values therefore have equal fields.
class QtScalar {
 public:
  QtScalar() : num_(), den_(1), m_(1) {}
  QtScalar(long c) : num_(c), den_(1), m_(1) {}  // NOLINT(google-explicit-constructor)
  explicit QtScalar(const BigRational& c) : num_(c), den_(1), m_(1) {}
  QtScalar(LaurentPoly num, LaurentPoly den, int m);

  static QtScalar q_power(const BigRational& exponent);  // q^e, e a rational
  static QtScalar q_pow(int e) { return q_power(BigRational(e)); }
  static QtScalar t_pow(int e);
  static QtScalar qt(int q_exp, int t_exp, long coeff = 1);
  // h = t - t^{-1}
  static QtScalar h();

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  int m() const { return m_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool has_t() const { return num_.has_t() || den_.has_t(); }
  // True when the value is a Laurent polynomial (denominator 1).
  bool is_laurent() const { return den_.is_constant(); }

  QtScalar operator-() const;
  QtScalar& operator+=(const QtScalar& o);
  QtScalar& operator-=(const QtScalar& o);
  QtScalar& operator*=(const QtScalar& o);
  QtScalar& operator/=(const QtScalar& o);

  friend QtScalar operator+(QtScalar a, const QtScalar& b) { return a += b; }
  friend QtScalar operator-(QtScalar a, const QtScalar& b) { return a -= b; }
  friend QtScalar operator*(QtScalar a, const QtScalar& b) { return a *= b; }
  friend QtScalar operator/(QtScalar a, const QtScalar& b) { return a /= b; }
  friend bool operator==(const QtScalar& a, const QtScalar& b);

  QtScalar pow(int e) const;
  QtScalar inverse() const;

  std::string to_string() const;

 private:
  void normalize();
  QtScalar lifted(int m) const;

  LaurentPoly num_;
  LaurentPoly den_;
  int m_;
};

// q -> q^{-1}, t -> t^{-1}
QtScalar iota(const QtScalar& a);

// Substitutes t = q^{-k/2}. Throws MathError when the denominator vanishes.
QtScalar specialize(const QtScalar& a, Specialization s);

}  // namespace gmult::coeff
