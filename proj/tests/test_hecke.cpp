#include <doctest.h>

#include "gmult/errors.hpp"
#include "gmult/hecke/hecke.hpp"
#include "support.hpp"

using namespace gmult;
using namespace gmult::hecke;
using coeff::QtScalar;
using groupalg::act_affine;
using rootsys::CartanType;
using rootsys::CorootVector;
using rootsys::Weight;

namespace {

AlgebraElement one(const RootSystem& rs) { return AlgebraElement::exp(rs.zero_weight()); }

// e^{α_i}; for i = 0 the monomial q^a e^{-θ} that s_0 inverts.
AlgebraElement simple_exponential(const RootSystem& rs, int i) {
  if (i > 0) return AlgebraElement::exp(rs.simple_root_weight(i - 1));
  Weight minus_theta = -rs.to_weight(rs.theta());
  auto s0 = weyl::ExtAffineWeylElement::simple(rs, 0);
  auto image = act_affine(rs, s0, AlgebraElement::exp(minus_theta));
  // s_0 e^{-θ} = q^c e^{θ}; then s_0 (q^{-c/2} e^{-θ}) = q^{c/2} e^{θ}
  QtScalar qc = image.coeff(-minus_theta);
  QtScalar half = QtScalar(1);
  for (int c = 1; c <= 4; ++c) {
    if (qc == QtScalar::q_pow(2 * c)) half = QtScalar::q_pow(-c);
    if (qc == QtScalar::q_pow(-2 * c)) half = QtScalar::q_pow(c);
  }
  return AlgebraElement::exp(minus_theta, half);
}

}  // namespace

TEST_SUITE("hecke") {

TEST_CASE("Demazure-Lusztig form of T_i") {
  // (1 − e^{α_i})(T_i f − t s_i f) = (t − t⁻¹)(f − s_i f), no division needed
  testing::Gen g(51);
  const QtScalar t = QtScalar::t_pow(1);
  for (const auto& label : testing::suite_types()) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    for (int i = 0; i <= rs.rank(); ++i) {
      auto si = weyl::ExtAffineWeylElement::simple(rs, i);
      auto x = simple_exponential(rs, i);
      CHECK(act_affine(rs, si, x) * x == one(rs));
      for (int n = 0; n < 10; ++n) {
        auto f = g.element(rs, 3, 3);
        auto sf = act_affine(rs, si, f);
        auto lhs = (one(rs) - x) * (apply_T(rs, i, f) - sf * t);
        CHECK(lhs == (f - sf) * QtScalar::h());
      }
    }
  }
}

TEST_CASE("quadratic relation and inverse") {
  testing::Gen g(52);
  for (const auto& label : testing::suite_types()) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    for (int n = 0; n < 15; ++n) {
      auto f = g.element(rs, 3, 2);
      int i = g.uniform(0, rs.rank());
      auto tf = apply_T(rs, i, f);
      CHECK(apply_T(rs, i, tf) - tf * QtScalar::h() - f == AlgebraElement());
      CHECK(apply_T_inverse(rs, i, tf) == f);
      CHECK(apply_T(rs, i, apply_T_inverse(rs, i, f)) == f);
    }
  }
}

TEST_CASE("braid relations") {
  testing::Gen g(53);
  auto same = [&](const char* label, weyl::Word a, weyl::Word b) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    auto ta = build_T_product(rs, a), tb = build_T_product(rs, b);
    for (int n = 0; n < 8; ++n) {
      auto f = g.element(rs, 2, 2);
      CHECK(ta.apply(rs, f) == tb.apply(rs, f));
    }
  };
  same("A2", {1, 2, 1}, {2, 1, 2});
  same("A2", {0, 1, 0}, {1, 0, 1});
  same("B2", {1, 2, 1, 2}, {2, 1, 2, 1});
  same("B2", {0, 2, 0, 2}, {2, 0, 2, 0});
  same("G2", {1, 2, 1, 2, 1, 2}, {2, 1, 2, 1, 2, 1});
  same("D4", {1, 3}, {3, 1});
}

TEST_CASE("T(w) through G factors equals the letter-by-letter product") {
  testing::Gen g(54);
  for (const auto& label : testing::suite_types()) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    for (int n = 0; n < 10; ++n) {
      weyl::Word w = g.word(rs, g.uniform(1, 7), true);
      if (!weyl::is_reduced(rs, w)) {
        CHECK_THROWS_AS(build_T_of_w(rs, w), InvalidArgument);
        continue;
      }
      auto f = g.element(rs, 2, 2);
      CHECK(build_T_of_w(rs, w).apply(rs, f) == build_T_product(rs, w).apply(rs, f));
      CHECK(build_T_inverse(rs, w).apply(rs, build_T_product(rs, w).apply(rs, f)) == f);
    }
  }
}

TEST_CASE("Y operators commute and multiply") {
  testing::Gen g(55);
  RootSystem rs(CartanType::parse("A2"));
  CorootVector a{1, 1}, b{2, 1};
  auto ya = build_Y(rs, a), yb = build_Y(rs, b), yab = build_Y(rs, a + b);
  CHECK(build_Y(rs, a).apply(rs, one(rs)) == build_Y_theta_dual(rs).apply(rs, one(rs)));
  for (int n = 0; n < 6; ++n) {
    auto f = g.element(rs, 2, 2);
    auto ab = ya.apply(rs, yb.apply(rs, f));
    CHECK(ab == yb.apply(rs, ya.apply(rs, f)));
    CHECK(ab == yab.apply(rs, f));
    CHECK(build_Y_minus_theta_dual(rs).apply(rs, ya.apply(rs, f)) == f);
  }
}

TEST_CASE("Y of theta dual against the closed forms") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"}) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    const auto expected = proposition_expected(rs);
    const auto y = build_Y_theta_dual(rs);
    const auto yt = build_T_product(rs, weyl::reduced_word_tau_theta(rs));
    for (const auto* op : {&y, &yt}) {
      CHECK(op->apply(rs, one(rs)) == expected.on_zero);
      CHECK(op->apply(rs, AlgebraElement::exp(rs.to_weight(rs.theta()))) == expected.on_theta);
      if (rs.theta_s()) {
        REQUIRE(expected.on_theta_s);
        CHECK(op->apply(rs, AlgebraElement::exp(rs.to_weight(*rs.theta_s()))) ==
              *expected.on_theta_s);
      }
    }
    CHECK_FALSE(y.describe().empty());
  }
}

}  // TEST_SUITE
