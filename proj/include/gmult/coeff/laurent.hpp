#pragma once

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gmult::coeff {

using BigRational = mpq_class;
using BigInt = mpz_class;

std::string to_string(const BigRational& x);

// Exponent pair of v^a t^b, where v stands for q^{1/m}.
struct Monomial {
  int v = 0;
  int t = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend Monomial operator+(Monomial a, Monomial b) { return {a.v + b.v, a.t + b.t}; }
  friend Monomial operator-(Monomial a, Monomial b) { return {a.v - b.v, a.t - b.t}; }
};

// Sparse Laurent polynomial in the two variables v and t over Q.
//
// Terms are kept sorted ascending in lex order (v exponent first) with no
// zero coefficients, so the representation is canonical and `==` is
// structural.
class LaurentPoly {
 public:
  struct Term {
    Monomial mono;
    BigRational coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): constants read naturally
  explicit LaurentPoly(const BigRational& c);

  static LaurentPoly monomial(Monomial m, const BigRational& c = 1);
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_t() const;
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Componentwise minimum of exponents; {0,0} for the zero polynomial.
  Monomial min_exponents() const;
  // Largest monomial in lex order and its coefficient (poly must be nonzero).
  const Term& leading_term() const { return terms_.back(); }

  LaurentPoly shifted(Monomial by) const;
  LaurentPoly inverted() const;                  // v -> v^-1, t -> t^-1
  LaurentPoly scale_v(int factor) const;         // v -> v^factor
  LaurentPoly substitute_t(int v_power) const;   // t -> v^v_power
  // gcd of all v exponents (0 for a polynomial constant in v).
  int v_exponent_gcd() const;
  LaurentPoly divide_v_exponents(int d) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigRational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const BigRational& c) { return a *= c; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  // Rendering with v printed as q^(a/m); terms descending.
  std::string to_string(int m) const;

 private:
  void canonicalize();
  std::vector<Term> terms_;
};

// gcd in Q[v,t] of two polynomials with non-negative exponents, normalized
// so that the leading coefficient is 1. gcd(0, 0) is 0.
LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient a / b when b divides a in Q[v^±1, t^±1]; false otherwise.
bool exact_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient);

}  // namespace gmult::coeff
