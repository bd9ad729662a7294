#pragma once

// Seeded generators shared by the unit tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gmult/groupalg/algebra.hpp"
#include "gmult/rootsys/root_system.hpp"
#include "gmult/weyl/weyl.hpp"

namespace gmult::testing {

using coeff::QtScalar;
using groupalg::AlgebraElement;
using rootsys::RootSystem;
using rootsys::Weight;

inline const std::vector<std::string>& suite_types() {
  static const std::vector<std::string> t{"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"};
  return t;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  int nonzero(int lo, int hi) {
    for (;;)
      if (int v = uniform(lo, hi); v != 0) return v;
  }

  // small Laurent monomials in q and t with integer coefficients
  QtScalar monomial() { return QtScalar::qt(uniform(-3, 3), uniform(-3, 3), nonzero(-4, 4)); }

  QtScalar polynomial(int terms = 3) {
    QtScalar s;
    for (int i = 0; i < terms; ++i) s += monomial();
    return s;
  }

  // ratio of two short polynomials; never zero
  QtScalar rational() {
    for (;;) {
      QtScalar num = polynomial(uniform(1, 3));
      QtScalar den = polynomial(uniform(1, 2));
      if (!num.is_zero() && !den.is_zero()) return num / den;
    }
  }

  Weight weight(const RootSystem& rs, int bound) {
    Weight w = rs.zero_weight();
    for (int i = 0; i < rs.rank(); ++i) w[i] = uniform(-bound, bound);
    return w;
  }

  AlgebraElement element(const RootSystem& rs, int bound, int terms) {
    AlgebraElement f;
    for (int i = 0; i < terms; ++i) f.add_term(weight(rs, bound), monomial());
    return f;
  }

  weyl::Word word(const RootSystem& rs, int length, bool affine) {
    weyl::Word w(static_cast<std::size_t>(length));
    for (auto& x : w) x = uniform(affine ? 0 : 1, rs.rank());
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gmult::testing
