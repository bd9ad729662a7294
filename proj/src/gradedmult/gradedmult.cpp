#include "gmult/gradedmult/gradedmult.hpp"

#include <cstdlib>

#include "gmult/errors.hpp"
#include "gmult/macdonald/macdonald.hpp"

namespace gmult::gradedmult {

using coeff::BigRational;
using coeff::LaurentPoly;
using groupalg::AlgebraElement;

Budget default_budget() {
  Budget b;
  b.max_weyl_order = macdonald::max_weyl_order();
  if (const char* env = std::getenv("GMULT_ALLOW_SLOW")) b.allow_slow = std::string(env) == "1";
  return b;
}

void check_budget(const RootSystem& rs, const Budget& budget) {
  const auto& t = rs.type();
  if (t.letter == 'E' && t.rank >= 7)
    throw BudgetExceeded(rs.label() + ": exterior algebra decomposition is formula-only");
  if (t.letter == 'E' && t.rank == 6 && !budget.allow_slow)
    throw BudgetExceeded("E6 needs the slow flag (GMULT_ALLOW_SLOW=1)");
  if (rs.weyl_order() > budget.max_weyl_order)
    throw BudgetExceeded(rs.label() + ": |W| = " + std::to_string(rs.weyl_order()) +
                         " exceeds " + std::to_string(budget.max_weyl_order));
  if (rs.roots().size() > budget.max_roots)
    throw BudgetExceeded(rs.label() + ": |R| = " + std::to_string(rs.roots().size()) +
                         " exceeds " + std::to_string(budget.max_roots));
}

ExteriorCharacter exterior_character(const RootSystem& rs, const Budget& budget) {
  check_budget(rs, budget);
  ExteriorCharacter ec(rs.zero_weight());
  IntPoly one_plus_q = IntPoly(1) + IntPoly::monomial(1);
  IntPoly pre(1);
  for (int i = 0; i < rs.rank(); ++i) pre *= one_plus_q;
  ec.multiply_scalar(pre);
  for (const auto& alpha : rs.root_weights()) ec.multiply_binomial(alpha, 1, 1);
  return ec;
}

std::string check_exterior_character(const RootSystem& rs, const ExteriorCharacter& ec) {
  coeff::BigInt expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 2, static_cast<unsigned long>(rs.dim_g()));
  if (ec.total_mass() != expected) return "total mass is not 2^dim g";
  int lo = rs.dim_g(), hi = 0;
  for (const auto& [mu, p] : ec.terms()) {
    lo = std::min(lo, p.low_degree());
    hi = std::max(hi, p.high_degree());
    for (int i = 0; i < rs.rank(); ++i)
      if (!(ec.coeff(rs.reflect(i, mu)) == p))
        return "not invariant under s" + std::to_string(i + 1) + " at " + mu.to_string();
  }
  if (lo != 0 || hi != rs.dim_g()) return "q-degrees do not span 0..dim g";
  return {};
}

GradedMultiplicities decompose(const RootSystem& rs, const ExteriorCharacter& ec) {
  using Key = std::pair<std::int64_t, Weight>;
  std::map<Key, IntPoly> residual;
  for (const auto& [mu, p] : ec.terms())
    if (rs.is_dominant(mu)) residual.emplace(Key{macdonald::scaled_height(rs, mu), mu}, p);
  const Weight two_rho = rs.rho() + rs.rho();
  GradedMultiplicities out;
  while (!residual.empty()) {
    auto top = std::prev(residual.end());
    const Weight lambda = top->first.second;
    const IntPoly g = top->second;
    residual.erase(top);
    if (g.has_negative_coefficient())
      throw MathError("negative coefficient in GM at " + lambda.to_string() + ": " + g.to_string());
    if (!rs.in_root_lattice(lambda))
      throw MathError("nonzero GM at " + lambda.to_string() + " outside the root lattice");
    if (!rs.dominance_leq(lambda, two_rho))
      throw MathError("nonzero GM at " + lambda.to_string() + " above 2rho");
    out[lambda] = g;
    for (const auto& [mu, mult] : macdonald::dominant_multiplicities(rs, lambda)) {
      if (mu == lambda) continue;
      Key key{macdonald::scaled_height(rs, mu), mu};
      IntPoly& slot = residual[key];
      slot.add_scaled(g, -mult, 0);
      if (slot.is_zero()) residual.erase(key);
    }
  }
  return out;
}

namespace {

IntPoly one_plus(int degree) { return IntPoly(1) + IntPoly::monomial(degree); }

// (1+q⁻¹) Π_{i<r} (1+q^{2d_i+1})
IntPoly common_prefix(const RootSystem& rs) {
  const auto& d = rs.exponents().d;
  IntPoly p = one_plus(-1);
  for (std::size_t i = 0; i + 1 < d.size(); ++i) p *= one_plus(2 * d[i] + 1);
  return p;
}

void require_polynomial(const IntPoly& p, const char* what) {
  if (p.has_negative_degree()) throw MathError(std::string(what) + ": negative power of q survives");
  if (p.has_negative_coefficient()) throw MathError(std::string(what) + ": negative coefficient");
}

IntPoly to_int_poly(const QtScalar& x) {
  if (x.has_t() || !x.is_laurent() || x.m() != 1)
    throw MathError("expected a Laurent polynomial in q, got " + x.to_string());
  const BigRational& d = x.den().terms().front().coeff;
  std::map<int, std::int64_t> coeffs;
  for (const auto& term : x.num().terms()) {
    BigRational c = term.coeff / d;
    c.canonicalize();
    if (c.get_den() != 1 || !c.get_num().fits_slong_p())
      throw MathError("non-integral coefficient in " + x.to_string());
    coeffs[term.mono.v] = c.get_num().get_si();
  }
  return IntPoly::from_map(coeffs);
}

AlgebraElement root_sum(const RootSystem& rs, bool short_only) {
  AlgebraElement f;
  for (std::size_t j = 0; j < rs.roots().size(); ++j)
    if (!short_only || rs.is_short(rs.roots()[j])) f.add_term(rs.root_weights()[j], QtScalar(1));
  return f;
}

// (qt²−1)/(qt^{−2d_r}−1)
QtScalar x_factor(const RootSystem& rs) {
  int dr = rs.exponents().d.back();
  return (QtScalar::qt(1, 2) - QtScalar(1)) / (QtScalar::qt(1, -2 * dr) - QtScalar(1));
}

}  // namespace

IntPoly gm_formula_zero(const RootSystem& rs) {
  IntPoly p(1);
  for (int di : rs.exponents().d) p *= one_plus(2 * di + 1);
  return p;
}

IntPoly gm_formula_theta(const RootSystem& rs) {
  IntPoly sum;
  for (int di : rs.exponents().d) sum += IntPoly::monomial(2 * di);
  IntPoly p = common_prefix(rs) * sum;
  require_polynomial(p, "GM_theta formula");
  return p;
}

IntPoly gm_formula_theta_s(const RootSystem& rs) {
  if (rs.simply_laced()) throw InvalidArgument(rs.label() + " is simply laced; no theta_s");
  const auto& e = rs.exponents();
  const int dr = e.d.back();
  IntPoly p = common_prefix(rs) * IntPoly::monomial(dr + 1 - 2 * (e.r_s - 1) * e.r_l);
  IntPoly num = IntPoly(1) - IntPoly::monomial(4 * e.r_l * e.r_s);
  IntPoly den = IntPoly(1) - IntPoly::monomial(4 * e.r_l);
  p = (p * num).divide_exact(den);
  require_polynomial(p, "GM_theta_s formula");
  return p;
}

Target parse_target(const std::string& name) {
  if (name == "zero" || name == "0") return Target::Zero;
  if (name == "theta") return Target::Theta;
  if (name == "theta-s" || name == "theta_s") return Target::ThetaS;
  throw InvalidArgument("unknown lambda '" + name + "' (zero, theta, theta-s)");
}

std::string target_name(Target t) {
  switch (t) {
    case Target::Zero: return "zero";
    case Target::Theta: return "theta";
    case Target::ThetaS: return "theta-s";
  }
  return {};
}

Weight target_weight(const RootSystem& rs, Target t) {
  switch (t) {
    case Target::Zero: return rs.zero_weight();
    case Target::Theta: return rs.to_weight(rs.theta());
    case Target::ThetaS:
      if (!rs.theta_s()) throw InvalidArgument(rs.label() + " is simply laced; no theta_s");
      return rs.to_weight(*rs.theta_s());
  }
  return rs.zero_weight();
}

QtScalar macdonald_pairing(const RootSystem& rs, const Weight& lambda) {
  AlgebraElement one = AlgebraElement::exp(rs.zero_weight());
  return scalar::macdonald_product(rs, one, macdonald::weyl_character(rs, lambda), 2, true);
}

IntPoly gm_via_macdonald(const RootSystem& rs, Target target) {
  QtScalar pairing = macdonald_pairing(rs, target_weight(rs, target));
  IntPoly factor(1);
  for (int i = 0; i < rs.rank(); ++i) factor *= IntPoly(1) - IntPoly::monomial(1);
  return (factor * to_int_poly(pairing)).negate_q();
}

std::string check_theta_ratio_routes(const RootSystem& rs) {
  const QtScalar r(static_cast<long>(rs.rank()));
  QtScalar direct = macdonald_pairing(rs, rs.to_weight(rs.theta())) /
                    macdonald_pairing(rs, rs.zero_weight());
  QtScalar cherednik = r + scalar::cherednik_ratio(rs, root_sum(rs, false), 2);
  QtScalar sum;
  for (int di : rs.exponents().d) sum += QtScalar::t_pow(-2 * di);
  QtScalar closed = coeff::specialize(r + (-r + x_factor(rs) * sum), {2});
  if (!(direct == cherednik))
    return "constant term " + direct.to_string() + " != Cherednik " + cherednik.to_string();
  if (!(direct == closed))
    return "constant term " + direct.to_string() + " != closed form " + closed.to_string();
  // GM_θ(−q) = GM_0(−q) · ratio on the formula side.
  QtScalar lhs = groupalg::to_qt(gm_formula_theta(rs).negate_q());
  QtScalar rhs = groupalg::to_qt(gm_formula_zero(rs).negate_q()) * closed;
  if (!(lhs == rhs)) return "GM_theta(-q) != GM_0(-q) * ratio";
  return {};
}

QtScalar short_root_ratio_direct(const RootSystem& rs, int k) {
  if (rs.simply_laced()) throw InvalidArgument(rs.label() + " is simply laced");
  return scalar::cherednik_ratio(rs, root_sum(rs, true), k);
}

QtScalar short_root_ratio_formula(const RootSystem& rs, int k) {
  if (rs.simply_laced()) throw InvalidArgument(rs.label() + " is simply laced");
  const auto& e = rs.exponents();
  const int dr = e.d.back();
  QtScalar geo = (QtScalar(1) - QtScalar::t_pow(-4 * e.r_l * e.r_s)) /
                 (QtScalar(1) - QtScalar::t_pow(-4 * e.r_l));
  QtScalar v = QtScalar(static_cast<long>(-e.r_s)) +
               x_factor(rs) * QtScalar::t_pow(-dr - 1 + 2 * (e.r_s - 1) * e.r_l) * geo;
  return coeff::specialize(v, {k});
}

LemmaDSides lemma_d_sum(const RootSystem& rs, int k, int l) {
  if (k == 0) throw InvalidArgument("lemma_d_sum: k must be nonzero");
  LemmaDSides s;
  for (const auto& a : rs.positive_roots()) s.lhs += QtScalar::t_pow(k * a.sum() + l);
  for (int di : rs.exponents().d)
    s.rhs += QtScalar::t_pow(l) * (QtScalar(1) - QtScalar::t_pow(k * di)) /
             (QtScalar::t_pow(-k) - QtScalar(1));
  return s;
}

QtScalar delta2_constant_term_formula(const RootSystem& rs) {
  QtScalar v(1);
  const Weight rho = rs.rho();
  for (const auto& a : rs.positive_roots()) {
    int h = rs.pair(rho, a);
    v *= (QtScalar(1) - QtScalar::q_pow(2 * h + 1)) / (QtScalar(1) - QtScalar::q_pow(2 * h - 1));
  }
  return v;
}

QtScalar delta2_constant_term_direct(const RootSystem& rs) {
  AlgebraElement one = AlgebraElement::exp(rs.zero_weight());
  return scalar::macdonald_product(rs, one, one, 2, true);
}

}  // namespace gmult::gradedmult
