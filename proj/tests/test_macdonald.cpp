#include <doctest.h>

#include "gmult/errors.hpp"
#include "gmult/macdonald/macdonald.hpp"
#include "gmult/scalar/scalar.hpp"
#include "support.hpp"

using namespace gmult;
using namespace gmult::macdonald;
using rootsys::CartanType;

namespace {

AlgebraElement one(const RootSystem& rs) { return AlgebraElement::exp(rs.zero_weight()); }

// Weyl character by brute-force multiplicities: sum over the orbits of the
// dominant weights, each with its Freudenthal multiplicity.
AlgebraElement character_from_multiplicities(const RootSystem& rs, const Weight& lambda) {
  AlgebraElement f;
  for (const auto& [mu, m] : dominant_multiplicities(rs, lambda))
    f += groupalg::orbit_sum(rs, mu) * QtScalar(static_cast<long>(m));
  return f;
}

}  // namespace

TEST_SUITE("macdonald") {

TEST_CASE("dominant weights: walk against box") {
  testing::Gen g(61);
  for (const auto& label : testing::suite_types()) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    for (int n = 0; n < 6; ++n) {
      Weight lambda = rs.dominant_representative(g.weight(rs, 2));
      CHECK(dominant_weights_below(rs, lambda) == dominant_weights_below_box(rs, lambda));
      CHECK(dominant_weights_below(rs, lambda).back() == lambda);
    }
  }
  RootSystem a2(CartanType::parse("A2"));
  CHECK_THROWS_AS(dominant_weights_below(a2, Weight{1, -1}), InvalidArgument);
}

TEST_CASE("dominant weights up to a height") {
  RootSystem rs(CartanType::parse("A2"));
  // ω1 and ω2 have height 2/3, ω1+ω2 has 2 and 2ω1 has 4/3
  auto ws = dominant_weights_up_to_height(rs, 1);
  CHECK(ws.size() == 3);
  for (const auto& label : testing::suite_types()) {
    RootSystem r(CartanType::parse(label));
    int h = r.theta().sum();
    for (const auto& w : dominant_weights_up_to_height(r, h)) {
      CHECK(r.is_dominant(w));
      CHECK(scaled_height(r, w) <= h * r.root_coord_denominator());
    }
  }
}

TEST_CASE("Weyl character: alternant against Freudenthal") {
  testing::Gen g(62);
  for (const auto& label : testing::suite_types()) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    for (int n = 0; n < 4; ++n) {
      Weight lambda = rs.dominant_representative(g.weight(rs, 1));
      auto chi = weyl_character(rs, lambda);
      CHECK(chi == character_from_multiplicities(rs, lambda));
      coeff::BigRational dim = 0;
      for (const auto& [mu, c] : chi.terms()) dim += c.num().terms().front().coeff;
      CHECK(dim == weyl_dimension(rs, lambda));
    }
  }
}

TEST_CASE("dimensions") {
  auto dim = [](const char* label, rootsys::Weight w) {
    RootSystem rs(CartanType::parse(label));
    return weyl_dimension(rs, w);
  };
  CHECK(dim("A2", {1, 1}) == 8);
  CHECK(dim("G2", {0, 1}) == 14);  // θ = ω2
  CHECK(dim("G2", {1, 0}) == 7);
  CHECK(dim("B3", {0, 0, 1}) == 8);
  CHECK(dim("D4", {0, 1, 0, 0}) == 28);
  CHECK(dim("F4", {1, 0, 0, 0}) == 52);
  CHECK(dim("F4", {0, 0, 0, 1}) == 26);
}

TEST_CASE("specializations at k = 0 and k = 1") {
  for (const char* label : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    for (const auto& lambda : dominant_weights_up_to_height(rs, rs.theta().sum())) {
      CAPTURE(lambda.to_string());
      CHECK(macdonald_poly(rs, lambda, 0).expansion == groupalg::orbit_sum(rs, lambda));
      CHECK(macdonald_poly(rs, lambda, 1).expansion == weyl_character(rs, lambda));
    }
  }
}

TEST_CASE("orthogonality at k = 2") {
  for (const char* label : {"A2", "B2", "G2"}) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    for (const auto& lambda : dominant_weights_up_to_height(rs, rs.theta().sum())) {
      auto p = macdonald_poly(rs, lambda, 2);
      CHECK(verify_orthogonality(rs, p));
      CHECK(groupalg::is_w_invariant(rs, p.expansion));
      CHECK(p.orbit_coefficients.at(lambda) == QtScalar(1));
    }
  }
}

TEST_CASE("P of the highest short root") {
  for (const char* label : {"B2", "B3", "C3", "G2"}) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    Weight ts = rs.to_weight(*rs.theta_s());
    auto m = groupalg::orbit_sum(rs, ts);
    const int r_s = rs.exponents().r_s;
    CHECK(weyl_character(rs, ts) == m + one(rs) * QtScalar(r_s));
    for (int k : {1, 2}) {
      auto ratio = scalar::macdonald_product(rs, m, one(rs), k) /
                   scalar::macdonald_product(rs, one(rs), one(rs), k);
      CHECK(macdonald_poly(rs, ts, k).expansion == m - one(rs) * ratio);
    }
  }
}

TEST_CASE("budgets and invalid input") {
  RootSystem rs(CartanType::parse("B2"));
  CHECK_THROWS_AS(weyl_character(rs, Weight{-1, 0}), InvalidArgument);
  CHECK_THROWS_AS(macdonald_poly(rs, Weight{0, -1}, 1), InvalidArgument);
}

}  // TEST_SUITE
