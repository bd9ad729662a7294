#include <doctest.h>

#include <cstdlib>

#include "gmult/errors.hpp"
#include "gmult/gradedmult/gradedmult.hpp"
#include "gmult/macdonald/macdonald.hpp"
#include "support.hpp"

using namespace gmult;
using namespace gmult::gradedmult;
using rootsys::CartanType;

namespace {

IntPoly q(int e, std::int64_t c = 1) { return IntPoly::monomial(e, c); }

IntPoly one_plus_q_pow(int e, int n) {
  IntPoly p(1);
  for (int i = 0; i < n; ++i) p *= IntPoly(1) + q(e);
  return p;
}

// Brauer's formula: the multiplicity of V(λ) in a W-invariant P is the
// coefficient of e^{λ+ρ} in P · Σ_w sgn(w) e^{wρ}.
IntPoly brauer_multiplicity(const RootSystem& rs, const ExteriorCharacter& ec, const Weight& lambda) {
  IntPoly n;
  const Weight rho = rs.rho();
  for (const auto& w_rho : rs.weyl_orbit(rho)) {
    int inversions = 0;
    for (const auto& a : rs.positive_roots())
      if (rs.pair(w_rho, a) < 0) ++inversions;
    IntPoly c = ec.coeff(lambda + rho - w_rho);
    n += inversions % 2 ? -c : c;
  }
  return n;
}

}  // namespace

TEST_SUITE("gradedmult") {

TEST_CASE("frozen small-rank values") {
  auto gm = [](const char* label) {
    RootSystem rs(CartanType::parse(label));
    return std::pair{decompose(rs, exterior_character(rs)), RootSystem(rs.type())};
  };
  {
    auto [m, rs] = gm("A1");
    CHECK(m.at(rs.zero_weight()) == IntPoly(1) + q(3));
    CHECK(m.at(rootsys::Weight{2}) == q(1) + q(2));
    CHECK(m.size() == 2);
  }
  {
    auto [m, rs] = gm("A2");
    CHECK(m.at(rs.zero_weight()) == IntPoly(1) + q(3) + q(5) + q(8));
  }
  {
    auto [m, rs] = gm("B2");
    CHECK(m.at(rs.to_weight(rs.theta())) == q(1) + q(2) + q(4) + q(5, 2) + q(6) + q(8) + q(9));
    CHECK(m.at(rs.to_weight(*rs.theta_s())) == q(3) + q(4) + q(6) + q(7));
  }
  {
    auto [m, rs] = gm("G2");
    CHECK(m.at(rs.zero_weight()) == IntPoly(1) + q(3) + q(11) + q(14));
    CHECK(m.at(rs.to_weight(*rs.theta_s())) == q(5) + q(6) + q(8) + q(9));
  }
}

TEST_CASE("exterior character mass") {
  for (const char* label : {"A1", "B2", "G2", "A3"}) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    auto ec = exterior_character(rs);
    CHECK(check_exterior_character(rs, ec).empty());
    CHECK(ec.total_mass() == coeff::BigInt(1) << rs.dim_g());
    // e^μ → 1
    IntPoly sum;
    for (const auto& [mu, p] : ec.terms()) sum += p;
    CHECK(sum == one_plus_q_pow(1, rs.dim_g()));
  }
  RootSystem a1(CartanType::parse("A1"));
  CHECK(exterior_character(a1).total_mass() == 8);
  RootSystem g2(CartanType::parse("G2"));
  CHECK(exterior_character(g2).total_mass() == 16384);
}

TEST_CASE("decompose against Brauer's formula") {
  for (const char* label : {"A1", "A2", "B2", "G2", "A3"}) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    auto ec = exterior_character(rs);
    auto gm = decompose(rs, ec);
    for (const auto& [mu, p] : ec.terms()) {
      if (!rs.is_dominant(mu)) continue;
      auto it = gm.find(mu);
      IntPoly expected = brauer_multiplicity(rs, ec, mu);
      CHECK((it == gm.end() ? IntPoly() : it->second) == expected);
    }
    // Σ_λ GM_λ(1) dim V(λ) = 2^{dim g}
    coeff::BigRational total = 0;
    for (const auto& [lambda, p] : gm) total += macdonald::weyl_dimension(rs, lambda) * p.eval_at_one();
    CHECK(total == coeff::BigRational(coeff::BigInt(1) << rs.dim_g()));
  }
}

TEST_CASE("GM_0 is palindromic") {
  for (const auto& label : testing::suite_types()) {
    RootSystem rs(CartanType::parse(label));
    auto p = gm_formula_zero(rs);
    int top = p.high_degree();
    CHECK(top == rs.dim_g());
    for (int i = 0; i <= top; ++i) CHECK(p[i] == p[top - i]);
  }
}

TEST_CASE("formulas for every type") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    const int r = rs.rank();
    CHECK(gm_formula_theta(rs).eval_at_one() == (std::int64_t{1} << r) * r);
    CHECK(gm_formula_zero(rs).eval_at_one() == std::int64_t{1} << r);
    IntPoly zero(1);
    for (int d : rs.exponents().d) zero *= IntPoly(1) + q(2 * d + 1);
    CHECK(gm_formula_zero(rs) == zero);
    if (!rs.simply_laced()) {
      auto ts = gm_formula_theta_s(rs);
      CHECK_FALSE(ts.has_negative_coefficient());
      CHECK(ts.eval_at_one() == (std::int64_t{1} << r) * rs.exponents().r_s);
    } else {
      CHECK_THROWS_AS(gm_formula_theta_s(rs), InvalidArgument);
    }
  }
}

TEST_CASE("short exponents form an arithmetic progression") {
  // d_i^(s) = (d_r + 1)/2 + (2i − 1 − r_s) r_l
  for (const char* label : {"B2", "B3", "C3", "G2", "F4"}) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    const auto& e = rs.exponents();
    const int dr = e.d.back();
    for (int i = 1; i <= e.r_s; ++i)
      CHECK(2 * e.d_s[static_cast<std::size_t>(i - 1)] == dr + 1 + 2 * (2 * i - 1 - e.r_s) * e.r_l);
  }
}

TEST_CASE("short-root ratio: Σ t^{-2d_s} form against the closed form") {
  for (const char* label : {"B2", "B3", "C3", "G2"}) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    const auto& e = rs.exponents();
    const int dr = e.d.back();
    for (int k : {1, 2}) {
      QtScalar t2 = QtScalar::t_pow(2), qq = QtScalar::q_pow(1);
      QtScalar x = (qq * t2 - QtScalar(1)) / (qq * t2.pow(-dr) - QtScalar(1));
      QtScalar sum;
      for (int d : e.d_s) sum += t2.pow(-d);
      QtScalar generic = QtScalar(-e.r_s) + x * sum;
      CHECK(coeff::specialize(generic, {k}) == short_root_ratio_formula(rs, k));
      CHECK(short_root_ratio_direct(rs, k) == short_root_ratio_formula(rs, k));
    }
  }
}

TEST_CASE("lemma d") {
  RootSystem rs(CartanType::parse("G2"));
  for (int k : {-2, -1, 1, 2})
    for (int l : {-1, 0, 1}) {
      auto s = lemma_d_sum(rs, k, l);
      CHECK(s.lhs == s.rhs);
    }
  CHECK_THROWS_AS(lemma_d_sum(rs, 0, 0), InvalidArgument);
  auto a1 = lemma_d_sum(RootSystem(CartanType::parse("A1")), -2, 0);
  CHECK(a1.lhs == QtScalar::t_pow(-2));
  CHECK(a1.rhs == QtScalar::t_pow(-2));
  auto b2 = lemma_d_sum(RootSystem(CartanType::parse("B2")), -2, 0);
  // heights 1, 1, 2, 3
  CHECK(b2.lhs == QtScalar::t_pow(-2) * 2 + QtScalar::t_pow(-4) + QtScalar::t_pow(-6));
  CHECK(b2.rhs == b2.lhs);
}

TEST_CASE("constant term at k = 2") {
  for (const auto& label : testing::suite_types()) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    CHECK(delta2_constant_term_direct(rs) == delta2_constant_term_formula(rs));
  }
  RootSystem a1(CartanType::parse("A1"));
  CHECK(delta2_constant_term_formula(a1) == QtScalar(1) + QtScalar::q_pow(1) + QtScalar::q_pow(2));
}

TEST_CASE("decompose rejects bad characters") {
  RootSystem a2(CartanType::parse("A2"));
  ExteriorCharacter neg(a2.zero_weight());
  neg.multiply_binomial(a2.to_weight(a2.theta()), 1, -1);
  CHECK_THROWS_AS(decompose(a2, neg), MathError);
  ExteriorCharacter off(a2.zero_weight());
  off.multiply_binomial(rootsys::Weight{1, 0}, 1, 1);
  CHECK_THROWS_AS(decompose(a2, off), MathError);
}

TEST_CASE("budgets") {
  for (const char* label : {"E7", "E8"}) {
    RootSystem rs(CartanType::parse(label));
    CHECK_THROWS_AS(check_budget(rs, Budget{}), BudgetExceeded);
  }
  RootSystem e6(CartanType::parse("E6"));
  CHECK_THROWS_AS(check_budget(e6, Budget{}), BudgetExceeded);
  Budget slow;
  slow.allow_slow = true;
  CHECK_NOTHROW(check_budget(e6, slow));
  Budget tight;
  tight.max_weyl_order = 10;
  CHECK_THROWS_AS(check_budget(RootSystem(CartanType::parse("B3")), tight), BudgetExceeded);
  CHECK_NOTHROW(check_budget(RootSystem(CartanType::parse("F4")), Budget{}));
}

TEST_CASE("targets") {
  CHECK(parse_target("zero") == Target::Zero);
  CHECK(parse_target("0") == Target::Zero);
  CHECK(parse_target("theta") == Target::Theta);
  CHECK(parse_target("theta-s") == Target::ThetaS);
  CHECK(parse_target("theta_s") == Target::ThetaS);
  CHECK_THROWS_AS(parse_target("rho"), InvalidArgument);
  CHECK(target_name(Target::ThetaS) == "theta-s");
  RootSystem a2(CartanType::parse("A2"));
  CHECK_THROWS_AS(target_weight(a2, Target::ThetaS), InvalidArgument);
}

TEST_CASE("GM through the Macdonald pairing") {
  for (const char* label : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(label);
    RootSystem rs(CartanType::parse(label));
    auto oracle = decompose(rs, exterior_character(rs));
    CHECK(gm_via_macdonald(rs, Target::Zero) == oracle.at(rs.zero_weight()));
    CHECK(gm_via_macdonald(rs, Target::Theta) == oracle.at(rs.to_weight(rs.theta())));
    if (rs.theta_s())
      CHECK(gm_via_macdonald(rs, Target::ThetaS) == oracle.at(rs.to_weight(*rs.theta_s())));
    CHECK(check_theta_ratio_routes(rs).empty());
  }
}

}  // TEST_SUITE
