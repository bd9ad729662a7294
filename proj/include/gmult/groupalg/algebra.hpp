#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "gmult/coeff/int_poly.hpp"
#include "gmult/coeff/qt_scalar.hpp"
#include "gmult/rootsys/root_system.hpp"
#include "gmult/weyl/weyl.hpp"

namespace gmult::groupalg {

using coeff::IntPoly;
using coeff::QtScalar;
using rootsys::RootSystem;
using rootsys::Weight;

// Finite sum Σ c_μ e^μ with QtScalar coefficients; zero terms never stored.
class AlgebraElement {
 public:
  using Map = std::map<Weight, QtScalar>;

  AlgebraElement() = default;
  static AlgebraElement exp(const Weight& mu, const QtScalar& c = QtScalar(1));
  static AlgebraElement constant(const Weight& zero, const QtScalar& c);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QtScalar coeff(const Weight& mu) const;
  void add_term(const Weight& mu, const QtScalar& c);

  AlgebraElement operator-() const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(const QtScalar& c);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(AlgebraElement a, const QtScalar& c) { return a *= c; }
  friend AlgebraElement operator*(const QtScalar& c, AlgebraElement a) { return a *= c; }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

  // "c*e[a1,...,ar] + ..." in lexicographic weight order
  std::string to_string() const;

 private:
  Map terms_;
};

AlgebraElement bar(const AlgebraElement& f);
AlgebraElement iota_coeffs(const AlgebraElement& f);
AlgebraElement specialize(const AlgebraElement& f, coeff::Specialization s);
AlgebraElement act_simple(const RootSystem& rs, int i, const AlgebraElement& f);  // i = 1..r
AlgebraElement act_weyl(const RootSystem& rs, const weyl::WeylElement& w, const AlgebraElement& f);
AlgebraElement act_affine(const RootSystem& rs, const weyl::ExtAffineWeylElement& w,
                          const AlgebraElement& f);
QtScalar constant_term(const AlgebraElement& f);
bool is_w_invariant(const RootSystem& rs, const AlgebraElement& f);

// m_λ; λ must be dominant.
AlgebraElement orbit_sum(const RootSystem& rs, const Weight& lambda);

// Parses "e[1,0]", "2*e[0,1] - e[0,0]", "-1/2*e[1,1]"; integer or rational
// coefficients only.
AlgebraElement parse_element(const RootSystem& rs, const std::string& text);
Weight parse_weight(const RootSystem& rs, const std::string& text);

// ---------------------------------------------------------------------------
// Group-algebra elements whose coefficients are integer Laurent polynomials
// in q. Used for products of many binomials (kernels, exterior algebra).
class PolyCharacter {
 public:
  using Map = std::unordered_map<Weight, IntPoly, rootsys::LatticeHash>;

  explicit PolyCharacter(const Weight& zero);  // the element 1

  const Map& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  IntPoly coeff(const Weight& mu) const;

  // *this ← *this · (1 + c q^a e^β)
  void multiply_binomial(const Weight& beta, int a, std::int64_t c);
  // *this ← *this · (c q^a)
  void multiply_scalar(const IntPoly& p);

  // Σ_μ coefficient mass (all weights, all degrees).
  coeff::BigInt total_mass() const;
  std::vector<Weight> sorted_support() const;
  AlgebraElement to_algebra() const;

 private:
  Map terms_;
};

// The value of an IntPoly in q as a QtScalar.
QtScalar to_qt(const IntPoly& p);

}  // namespace gmult::groupalg
