#include <doctest.h>

#include <cstdlib>

#include "gmult/errors.hpp"
#include "gmult/hecke/hecke.hpp"
#include "gmult/scalar/scalar.hpp"
#include "support.hpp"

using namespace gmult;
using namespace gmult::scalar;
using rootsys::CartanType;
using rootsys::Weight;

namespace {

AlgebraElement one(const RootSystem& rs) { return AlgebraElement::exp(rs.zero_weight()); }

// Δ_k as a product of AlgebraElements, for a second route to the kernel.
AlgebraElement slow_kernel(const RootSystem& rs, int k) {
  AlgebraElement d = one(rs);
  for (const auto& w : rs.root_weights())
    for (int i = 0; i < k; ++i) d = d * (one(rs) - AlgebraElement::exp(w, QtScalar::q_pow(i)));
  return d;
}

}  // namespace

TEST_SUITE("scalar") {

TEST_CASE("kernel matches the direct product") {
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    for (int k = 1; k <= 2; ++k)
      CHECK(build_kernel(rs, k, KernelKind::Macdonald).to_algebra() == slow_kernel(rs, k));
  }
}

TEST_CASE("A1 constant term at k = 2") {
  RootSystem rs(CartanType::parse("A1"));
  QtScalar q = QtScalar::q_pow(1);
  CHECK(groupalg::constant_term(slow_kernel(rs, 2)) == QtScalar(2) + q * 2 + q * q * 2);
  CHECK(macdonald_product(rs, one(rs), one(rs), 2, true) == QtScalar(1) + q + q * q);
  CHECK(macdonald_product(rs, one(rs), one(rs), 2) == QtScalar(2) + q * 2 + q * q * 2);
}

TEST_CASE("positive-root ratio theorem and its corollary") {
  for (const auto& label : testing::suite_types()) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    for (int k : {1, 2}) {
      CAPTURE(k);
      auto a = verify_theorem2(rs, k);
      CHECK_MESSAGE(a.passed, a.detail);
      CHECK(a.checked == rs.positive_roots().size());
      auto b = verify_corollary(rs, k);
      CHECK_MESSAGE(b.passed, b.detail);
    }
  }
}

TEST_CASE("theorem value in A1 at k = 1") {
  // (e^α, 1)/(1, 1) with t = q^{-1/2}: t^{-2}(t^2 - 1)/(q t^{-2} - 1)
  RootSystem rs(CartanType::parse("A1"));
  QtScalar t2 = QtScalar::t_pow(2), q = QtScalar::q_pow(1);
  CHECK(theorem2_value(rs, 1) == t2.inverse() * (t2 - QtScalar(1)) / (q / t2 - QtScalar(1)));
  auto ratio = cherednik_ratio(rs, AlgebraElement::exp(Weight{2}), 1);
  CHECK(ratio == coeff::specialize(theorem2_value(rs, 1), {1}));
}

TEST_CASE("unitarity of T_i") {
  for (const auto& label : testing::suite_types()) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    for (int k : {1, 2}) {
      auto r = verify_unitarity(rs, k, 2, 10, 77);
      CHECK_MESSAGE(r.passed, r.detail);
      CHECK(r.checked > 0);
    }
  }
}

TEST_CASE("symmetry and convexity") {
  for (const char* label : {"A2", "B2", "G2"}) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    auto s = verify_cherednik_symmetry(rs, 1, 2, 10, 78);
    CHECK_MESSAGE(s.passed, s.detail);
    auto c = verify_convexity_theorem(rs, 2);
    CHECK_MESSAGE(c.passed, c.detail);
  }
  for (const char* label : {"B2", "C3", "G2"}) {
    RootSystem rs(CartanType::parse(label));
    auto u = verify_unitarity_identity(rs, 2);
    CHECK_MESSAGE(u.passed, u.detail);
  }
}

TEST_CASE("sampled weights respect the height bound") {
  RootSystem rs(CartanType::parse("B3"));
  auto ws = sample_weights(rs, 2, 40, 5);
  CHECK(ws.size() == 40);
  for (const auto& w : ws) {
    auto h = rs.root_coords_scaled(w);
    std::int64_t s = 0;
    for (auto x : h) s += x;
    CHECK(std::abs(s) <= 2 * rs.root_coord_denominator());
  }
  CHECK(sample_weights(rs, 2, 40, 5) == ws);
}

TEST_CASE("budgets") {
  RootSystem rs(CartanType::parse("B3"));
  CHECK_THROWS_AS(build_kernel(rs, max_k() + 1, KernelKind::Macdonald), BudgetExceeded);
  CHECK_THROWS_AS(build_kernel(rs, -1, KernelKind::Macdonald), InvalidArgument);
  setenv("GMULT_MAX_KERNEL_TERMS", "100", 1);
  CHECK(max_kernel_terms() == 100);
  CHECK_THROWS_AS(build_kernel(rs, 2, KernelKind::Cherednik), BudgetExceeded);
  unsetenv("GMULT_MAX_KERNEL_TERMS");
  CHECK(max_kernel_terms() == 1'000'000);
  CHECK_THROWS_AS(cherednik_product(rs, one(rs), one(rs), 0), InvalidArgument);
}

}  // TEST_SUITE
