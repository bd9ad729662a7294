#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "gmult/groupalg/algebra.hpp"

namespace gmult::macdonald {

using coeff::QtScalar;
using groupalg::AlgebraElement;
using rootsys::RootSystem;
using rootsys::Weight;

// Dominant μ ≤ λ, sorted by (height, lex) ascending; λ is last.
// Walks down from λ by positive roots, staying dominant (Stembridge: the
// covering relations of the dominance order on P⁺ are of this form).
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda);
// Same set by brute force over the box of simple-root coordinates.
std::vector<Weight> dominant_weights_below_box(const RootSystem& rs, const Weight& lambda);
// Every dominant weight (in P, not only Q) of height at most h.
std::vector<Weight> dominant_weights_up_to_height(const RootSystem& rs, int h);
// Height of a weight scaled by root_coord_denominator().
std::int64_t scaled_height(const RootSystem& rs, const Weight& mu);

struct MacdonaldPoly {
  Weight lambda;
  int k = 0;
  AlgebraElement expansion;
  std::map<Weight, QtScalar> orbit_coefficients;  // a_{λμ}, including a_{λλ} = 1
};

MacdonaldPoly macdonald_poly(const RootSystem& rs, const Weight& lambda, int k);
// ⟨P_λ, m_μ⟩_k = 0 for every dominant μ < λ.
bool verify_orthogonality(const RootSystem& rs, const MacdonaldPoly& p);

// |W| cap for alternant sums; GMULT_MAX_WEYL_ORDER overrides the default.
std::uint64_t max_weyl_order();

using IntCharacter = std::map<Weight, std::int64_t>;

// Alternant of λ+ρ divided by Π_{α>0}(1 − e^{−α}), remainder checked.
IntCharacter weyl_character_int(const RootSystem& rs, const Weight& lambda);
AlgebraElement weyl_character(const RootSystem& rs, const Weight& lambda);
// Dominant-weight multiplicities of V(λ) by Freudenthal's recursion.
std::map<Weight, std::int64_t> dominant_multiplicities(const RootSystem& rs, const Weight& lambda);
// Π_{α>0} (λ+ρ, α∨)/(ρ, α∨)
coeff::BigRational weyl_dimension(const RootSystem& rs, const Weight& lambda);

}  // namespace gmult::macdonald
