#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gmult/groupalg/algebra.hpp"
#include "gmult/weyl/weyl.hpp"

namespace gmult::hecke {

using groupalg::AlgebraElement;
using rootsys::RootSystem;
using weyl::AffineRoot;
using weyl::Word;

// G_â e^μ through the telescoped closed form; â = α + nδ.
AlgebraElement apply_G(const RootSystem& rs, const AffineRoot& a, const AlgebraElement& f);
// T_i = s_i ∘ G_{α_i}, i = 0..r
AlgebraElement apply_T(const RootSystem& rs, int i, const AlgebraElement& f);
// T_i⁻¹ = T_i − (t − t⁻¹)
AlgebraElement apply_T_inverse(const RootSystem& rs, int i, const AlgebraElement& f);

struct TStep {
  int i;
};
struct TInverseStep {
  int i;
};
struct GStep {
  AffineRoot root;
};
struct WStep {
  weyl::ExtAffineWeylElement w;
};
struct ScalarStep {
  coeff::QtScalar c;
};
using Step = std::variant<TStep, TInverseStep, GStep, WStep, ScalarStep>;

// Steps are stored in application order: steps()[0] acts first.
class HeckeOperator {
 public:
  HeckeOperator() = default;
  explicit HeckeOperator(std::vector<Step> steps) : steps_(std::move(steps)) {}

  const std::vector<Step>& steps() const { return steps_; }
  AlgebraElement apply(const RootSystem& rs, const AlgebraElement& f) const;
  // (*this) ∘ inner
  HeckeOperator after(const HeckeOperator& inner) const;
  std::string describe() const;

 private:
  std::vector<Step> steps_;
};

// w ∘ G_{α^(p)} ∘ ... ∘ G_{α^(1)} for the reduced word of w; throws on a
// non-reduced word.
HeckeOperator build_T_of_w(const RootSystem& rs, const Word& word);
// T_{a_1} ... T_{a_n} letter by letter.
HeckeOperator build_T_product(const RootSystem& rs, const Word& word);
// T(w)⁻¹ = T_{a_n}⁻¹ ... T_{a_1}⁻¹
HeckeOperator build_T_inverse(const RootSystem& rs, const Word& word);
HeckeOperator build_Y_theta_dual(const RootSystem& rs);
HeckeOperator build_Y_minus_theta_dual(const RootSystem& rs);
// Y^λ = T(τ(λ)) for dominant λ ∈ Q∨.
HeckeOperator build_Y(const RootSystem& rs, const rootsys::CorootVector& lambda);

// Right-hand sides of the three evaluations of Y^{θ∨} (e^0, e^θ, e^{θ_s}),
// including the G2 variants.
struct PropositionForms {
  AlgebraElement on_zero;
  AlgebraElement on_theta;
  std::optional<AlgebraElement> on_theta_s;
};
PropositionForms proposition_expected(const RootSystem& rs);

}  // namespace gmult::hecke
