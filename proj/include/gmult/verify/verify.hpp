#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmult/gradedmult/gradedmult.hpp"
#include "gmult/scalar/scalar.hpp"

namespace gmult::verify {

using rootsys::RootSystem;
using scalar::Report;

// Table counts against enumerated roots and the orbit of ρ.
Report verify_root_counts(const RootSystem& rs);
// Σd_i = |R⁺|, Π(d_i+1) = |W|, d_i + d_{r+1−i} = d_r + 1, short exponents.
Report verify_exponents(const RootSystem& rs);

// wβ = β − Σ_i (β, α^(i)∨) α_{j_i}; every w when |W| ≤ 5000, else `samples` words.
Report verify_lemma_formula_i(const RootSystem& rs, int samples, std::uint64_t seed);
// S(s_β) has 2 ht_l β − 1 long and 2Λ⁻¹ ht_s β short roots, β > 0 long.
Report verify_lemma_formula_ii(const RootSystem& rs);
Report verify_lemma_positive(const RootSystem& rs);  // l:>0
Report verify_lemma_ht(const RootSystem& rs);
// (a)–(f) of the chain lemma plus 2p+1 = 2L+S−1; Λ = 2 or simply laced.
Report verify_lemma_main(const RootSystem& rs);
Report verify_lemma_eps(const RootSystem& rs);
// Σ_{α>0} t^{k ht α + l} identity over k ∈ [−3,3]∖{0}, l ∈ [−2,2].
Report verify_lemma_d(const RootSystem& rs);

// (T_i − t)(T_i + t⁻¹) f = 0 for sampled f and i ∈ 0..r.
Report verify_hecke_quadratic(const RootSystem& rs, int samples, int sample_bound,
                              std::uint64_t seed);
// Y^{θ∨} on e^0, e^θ, e^{θ_s}: G-factorization and the T_i product against
// the closed forms.
Report verify_proposition(const RootSystem& rs);

// P_λ at k=0 is m_λ and at k=1 is χ_λ for dominant λ with ht λ ≤ ht θ.
Report verify_macdonald_specializations(const RootSystem& rs);
// χ_{θ_s} = m_{θ_s} + r_s e^0 = P_{θ_s}|_{k=1}, and P_{θ_s} = m_{θ_s} − (m_{θ_s},1)/(1,1)
// at k = 1, 2.
Report verify_theta_s_character(const RootSystem& rs);
// [Δ₂]₀ / |W| against the product formula.
Report verify_constant_term(const RootSystem& rs);
Report verify_short_root_ratio(const RootSystem& rs, int k);

// Criterion-shaped GM checks. `oracle` is decompose(exterior_character).
Report verify_gm_zero(const RootSystem& rs, const gradedmult::GradedMultiplicities& oracle);
Report verify_gm_theta(const RootSystem& rs, const gradedmult::GradedMultiplicities& oracle);
Report verify_gm_theta_s(const RootSystem& rs, const gradedmult::GradedMultiplicities& oracle);
// (1−q)^r ⟨1,χ_λ⟩₂ at q → −q equals the oracle for λ ∈ {0, θ_s, θ}, plus
// the three ratio routes for θ.
Report verify_gm_macdonald(const RootSystem& rs, const gradedmult::GradedMultiplicities& oracle);

struct SuiteConfig {
  std::uint64_t seed = 20240601;
  int sample_bound = 3;
  int hecke_samples = 100;
  int unitarity_pairs = 50;
  int formula_samples = 500;
  std::vector<int> ks{1, 2};
  bool include_gm = true;
};

struct TypeReport {
  std::string label;
  std::vector<Report> checks;
  bool passed() const;
};

// All checks for one type, in the fixed order of `verify --all`. A check that
// hits a budget is reported as failed with the reason in its detail.
TypeReport run_suite(const RootSystem& rs, const SuiteConfig& config);
// One job per type on a thread pool; results come back in input order.
std::vector<TypeReport> run_suites(const std::vector<std::string>& labels,
                                   const SuiteConfig& config, unsigned threads);

}  // namespace gmult::verify
