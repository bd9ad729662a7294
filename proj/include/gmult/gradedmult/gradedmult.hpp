#pragma once

#include <map>
#include <string>

#include "gmult/coeff/int_poly.hpp"
#include "gmult/groupalg/algebra.hpp"
#include "gmult/scalar/scalar.hpp"

namespace gmult::gradedmult {

using coeff::IntPoly;
using coeff::QtScalar;
using groupalg::PolyCharacter;
using rootsys::RootSystem;
using rootsys::Weight;

// P_{Λg}(q) = (1+q)^r Π_{α∈R} (1 + q e^α); coefficient of e^μ is a polynomial in q.
using ExteriorCharacter = PolyCharacter;
// λ → GM_λ(q)
using GradedMultiplicities = std::map<Weight, IntPoly>;

struct Budget {
  std::uint64_t max_weyl_order = 2'000'000;
  std::size_t max_roots = 72;
  bool allow_slow = false;  // E6
};

// Reads GMULT_MAX_WEYL_ORDER and GMULT_ALLOW_SLOW.
Budget default_budget();
// Throws BudgetExceeded when the exterior-algebra computation is out of range.
void check_budget(const RootSystem& rs, const Budget& budget);

ExteriorCharacter exterior_character(const RootSystem& rs, const Budget& budget = default_budget());
// Mass 2^{dim g}, degree span, W-invariance. Empty string when all hold.
std::string check_exterior_character(const RootSystem& rs, const ExteriorCharacter& ec);

// Peels ch V(λ) off the dominant part, highest λ first (height, then lex).
// A negative coefficient or a weight outside Q with nonzero GM throws MathError.
GradedMultiplicities decompose(const RootSystem& rs, const ExteriorCharacter& ec);

IntPoly gm_formula_zero(const RootSystem& rs);
// (1+q⁻¹) Π_{i<r}(1+q^{2d_i+1}) Σ_i q^{2d_i}
IntPoly gm_formula_theta(const RootSystem& rs);
// (1+q⁻¹) Π_{i<r}(1+q^{2d_i+1}) q^{d_r+1−2(r_s−1)r_l} (1−q^{4 r_l r_s})/(1−q^{4 r_l})
IntPoly gm_formula_theta_s(const RootSystem& rs);

enum class Target { Zero, ThetaS, Theta };
Target parse_target(const std::string& name);  // zero | theta | theta-s
std::string target_name(Target t);
Weight target_weight(const RootSystem& rs, Target t);

// ⟨1, χ_λ⟩₂ by the constant term of χ_λ Δ₂.
QtScalar macdonald_pairing(const RootSystem& rs, const Weight& lambda);
// (1−q)^r ⟨1, χ_λ⟩₂ at q → −q.
IntPoly gm_via_macdonald(const RootSystem& rs, Target target);

// ⟨1,χ_θ⟩₂/⟨1,1⟩₂ three ways: Macdonald constant terms, Cherednik ratio of
// Σ_{α∈R} e^α plus r, and the closed ratio r − r + (qt²−1)/(qt^{−2d_r}−1) Σ t^{−2d_i}
// at t = q⁻¹. Empty string when they agree.
std::string check_theta_ratio_routes(const RootSystem& rs);

// Σ_{α∈R_s} e^α against the short-root ratio formula at level k.
QtScalar short_root_ratio_direct(const RootSystem& rs, int k);
QtScalar short_root_ratio_formula(const RootSystem& rs, int k);

// Σ_{α>0} t^{k ht α + l} and Σ_i t^l (1 − t^{k d_i})/(t^{−k} − 1).
struct LemmaDSides {
  QtScalar lhs;
  QtScalar rhs;
};
LemmaDSides lemma_d_sum(const RootSystem& rs, int k, int l);

// Π_{α>0} (1 − q^{2(ρ,α∨)+1})/(1 − q^{2(ρ,α∨)−1})
QtScalar delta2_constant_term_formula(const RootSystem& rs);
QtScalar delta2_constant_term_direct(const RootSystem& rs);

}  // namespace gmult::gradedmult
