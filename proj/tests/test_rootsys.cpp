#include <doctest.h>

#include <numeric>

#include "gmult/errors.hpp"
#include "gmult/rootsys/root_system.hpp"
#include "support.hpp"

using namespace gmult;
using namespace gmult::rootsys;

namespace {

struct TypeRow {
  const char* label;
  std::size_t roots;
  std::uint64_t weyl;
  std::vector<int> exponents;
};

const std::vector<TypeRow>& table() {
  static const std::vector<TypeRow> rows{
      {"A1", 2, 2, {1}},
      {"A2", 6, 6, {1, 2}},
      {"A3", 12, 24, {1, 2, 3}},
      {"B2", 8, 8, {1, 3}},
      {"B3", 18, 48, {1, 3, 5}},
      {"C3", 18, 48, {1, 3, 5}},
      {"D4", 24, 192, {1, 3, 3, 5}},
      {"G2", 12, 12, {1, 5}},
      {"F4", 48, 1152, {1, 5, 7, 11}},
      {"E6", 72, 51840, {1, 4, 5, 7, 8, 11}},
      {"E7", 126, 2903040, {1, 5, 7, 9, 11, 13, 17}},
      {"E8", 240, 696729600, {1, 7, 11, 13, 17, 19, 23, 29}},
  };
  return rows;
}

}  // namespace

TEST_SUITE("rootsys") {

TEST_CASE("root counts, Weyl orders and exponents") {
  for (const auto& row : table()) {
    CAPTURE(row.label);
    RootSystem rs(CartanType::parse(row.label));
    CHECK(rs.roots().size() == row.roots);
    CHECK(rs.positive_roots().size() * 2 == row.roots);
    CHECK(rs.weyl_order() == row.weyl);
    CHECK(classification_root_count(rs.type()) == row.roots);
    CHECK(classification_weyl_order(rs.type()) == row.weyl);
    CHECK(rs.exponents().d == row.exponents);
    CHECK(rs.dim_g() == rs.rank() + static_cast<int>(row.roots));
    CHECK(rs.theta().sum() == row.exponents.back());
  }
}

TEST_CASE("highest roots") {
  auto check = [](const char* label, RootVector theta, std::optional<RootVector> theta_s) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    CHECK(rs.theta() == theta);
    CHECK(rs.theta_s() == theta_s);
    CHECK(rs.is_long(rs.theta()));
    CHECK(rs.is_dominant(rs.to_weight(rs.theta())));
    if (theta_s) {
      CHECK(rs.is_short(*theta_s));
      CHECK(rs.is_dominant(rs.to_weight(*theta_s)));
    }
  };
  check("A3", {1, 1, 1}, std::nullopt);
  check("D4", {1, 2, 1, 1}, std::nullopt);
  check("B2", {1, 2}, RootVector{1, 1});
  check("B3", {1, 2, 2}, RootVector{1, 1, 1});
  check("C3", {2, 2, 1}, RootVector{1, 2, 1});
  check("G2", {3, 2}, RootVector{2, 1});
  check("F4", {2, 3, 4, 2}, RootVector{1, 2, 3, 2});
}

TEST_CASE("short exponents") {
  auto ds = [](const char* label) { return RootSystem(CartanType::parse(label)).exponents().d_s; };
  CHECK(ds("B2") == std::vector<int>{2});
  CHECK(ds("B3") == std::vector<int>{3});
  CHECK(ds("C3") == std::vector<int>{2, 4});
  CHECK(ds("G2") == std::vector<int>{3});
  CHECK(ds("F4") == std::vector<int>{4, 8});
  CHECK(ds("D4").empty());
  RootSystem f4(CartanType::parse("F4"));
  CHECK(f4.exponents().r_l == 2);
  CHECK(f4.exponents().r_s == 2);
  CHECK(f4.lambda_ratio() == 2);
  CHECK(RootSystem(CartanType::parse("G2")).lambda_ratio() == 3);
}

TEST_CASE("exponents are the dual partition of the height distribution") {
  for (const auto& row : table()) {
    CAPTURE(row.label);
    RootSystem rs(CartanType::parse(row.label));
    std::map<int, int> by_height;
    for (const auto& a : rs.positive_roots()) ++by_height[a.sum()];
    // d_i counts heights n with m(n) ≥ r + 1 − i
    std::vector<int> d;
    for (int i = 1; i <= rs.rank(); ++i) {
      int c = 0;
      for (auto [n, m] : by_height)
        if (m >= rs.rank() + 1 - i) ++c;
      d.push_back(c);
    }
    CHECK(d == row.exponents);
  }
}

TEST_CASE("label parsing") {
  CHECK(CartanType::parse("g2") == CartanType{'G', 2});
  for (const char* bad : {"H3", "A0", "B1", "C1", "D3", "E9", "F3", "G3", "", "A", "Ax"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(CartanType::parse(bad), InvalidArgument);
  }
}

TEST_CASE("reflections") {
  testing::Gen g(21);
  for (const auto& label : testing::suite_types()) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    for (int n = 0; n < 30; ++n) {
      Weight mu = g.weight(rs, 4);
      int i = g.uniform(0, rs.rank() - 1);
      CHECK(rs.reflect(i, rs.reflect(i, mu)) == mu);
      Weight d = mu - rs.reflect(i, mu);
      CHECK(d == mu[i] * rs.simple_root_weight(i));
      // reflections preserve the form
      Weight nu = g.weight(rs, 4);
      CHECK(rs.inner(rs.reflect(i, mu), rs.reflect(i, nu)) == rs.inner(mu, nu));
      CHECK(rs.is_dominant(rs.dominant_representative(mu)));
    }
    for (const auto& a : rs.roots()) {
      CHECK(rs.is_root(rs.reflect(0, a)));
      CHECK(rs.reflect(a, a) == -a);
      CHECK(rs.pair(rs.to_weight(a), a) == 2);
    }
  }
}

TEST_CASE("orbit of rho is regular") {
  for (const auto& label : testing::suite_types()) {
    RootSystem rs(CartanType::parse(label));
    CHECK(rs.weyl_orbit(rs.rho()).size() == rs.weyl_order());
    CHECK(rs.weyl_orbit(rs.zero_weight()).size() == 1);
  }
}

TEST_CASE("root lattice membership and the index m") {
  RootSystem a2(CartanType::parse("A2"));
  CHECK(a2.m() == 3);
  CHECK_FALSE(a2.in_root_lattice(Weight{1, 0}));
  CHECK(a2.in_root_lattice(Weight{1, 1}));
  CHECK(a2.to_root(Weight{1, 1}) == RootVector{1, 1});
  CHECK(RootSystem(CartanType::parse("G2")).m() == 1);
  CHECK(RootSystem(CartanType::parse("B3")).m() == 2);
  CHECK(a2.inner(Weight{1, 0}, Weight{1, 0}) == coeff::BigRational(2, 3));
  CHECK(a2.dominance_leq(a2.zero_weight(), Weight{1, 1}));
  CHECK_FALSE(a2.dominance_leq(Weight{1, 1}, a2.zero_weight()));
}

}  // TEST_SUITE
