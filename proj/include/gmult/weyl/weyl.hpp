#pragma once

#include <string>
#include <vector>

#include "gmult/rootsys/root_system.hpp"

namespace gmult::weyl {

using rootsys::CorootVector;
using rootsys::RootSystem;
using rootsys::RootVector;
using rootsys::Weight;

// Words are vectors of letters {a_1, ..., a_n} meaning s_{a_1} ... s_{a_n};
// letter 0 is the affine reflection s_0 and letters 1..r are the simple
// reflections in Bourbaki numbering.
using Word = std::vector<int>;

std::string word_to_string(const Word& w);

// α + nδ
struct AffineRoot {
  RootVector root;
  int level = 0;

  bool is_positive() const;
  friend auto operator<=>(const AffineRoot&, const AffineRoot&) = default;
  std::string to_string() const;
};

// Element of the finite Weyl group, identified by w(ρ).
class WeylElement {
 public:
  explicit WeylElement(const RootSystem& rs);  // identity
  static WeylElement simple(const RootSystem& rs, int letter);
  static WeylElement from_word(const RootSystem& rs, const Word& word);
  static WeylElement reflection(const RootSystem& rs, const RootVector& beta);

  const Weight& rho_image() const { return rho_image_; }
  // Lexicographically first reduced word (greedy on the smallest index).
  const Word& reduced_word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  Weight apply(const RootSystem& rs, const Weight& mu) const;
  RootVector apply(const RootSystem& rs, const RootVector& a) const;
  CorootVector apply(const RootSystem& rs, const CorootVector& l) const;
  WeylElement inverse(const RootSystem& rs) const;
  WeylElement compose(const RootSystem& rs, const WeylElement& o) const;  // this · o

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rho_image_ == b.rho_image_;
  }

 private:
  WeylElement(const RootSystem& rs, Weight rho_image);
  Weight rho_image_;
  Word word_;
};

// Normal form w·τ(λ) with λ ∈ Q∨.
class ExtAffineWeylElement {
 public:
  explicit ExtAffineWeylElement(const RootSystem& rs);
  ExtAffineWeylElement(WeylElement w, CorootVector lambda);
  static ExtAffineWeylElement simple(const RootSystem& rs, int letter);  // letter 0..r
  static ExtAffineWeylElement from_word(const RootSystem& rs, const Word& word);
  static ExtAffineWeylElement translation(const RootSystem& rs, const CorootVector& lambda);

  const WeylElement& finite_part() const { return w_; }
  const CorootVector& translation_part() const { return lambda_; }

  AffineRoot apply(const RootSystem& rs, const AffineRoot& a) const;
  // w τ(λ) e^μ = q^{(λ,μ)} e^{wμ}; returns (wμ, (λ,μ)).
  std::pair<Weight, int> apply(const RootSystem& rs, const Weight& mu) const;
  ExtAffineWeylElement compose(const RootSystem& rs, const ExtAffineWeylElement& o) const;
  ExtAffineWeylElement inverse(const RootSystem& rs) const;

  friend bool operator==(const ExtAffineWeylElement& a, const ExtAffineWeylElement& b) {
    return a.w_ == b.w_ && a.lambda_ == b.lambda_;
  }

 private:
  WeylElement w_;
  CorootVector lambda_;
};

AffineRoot simple_affine_root(const RootSystem& rs, int letter);
AffineRoot apply_letter(const RootSystem& rs, int letter, const AffineRoot& a);

// S(w) = {a > 0 : w(a) < 0}, sorted.
std::vector<AffineRoot> inversion_set(const RootSystem& rs, const ExtAffineWeylElement& w);
std::vector<RootVector> inversion_set(const RootSystem& rs, const WeylElement& w);
int length(const RootSystem& rs, const ExtAffineWeylElement& w);
// Reduced word built from right descents.
Word reduced_word(const RootSystem& rs, const ExtAffineWeylElement& w);
bool is_reduced(const RootSystem& rs, const Word& word);

// α^(i) = s_{j_1} ... s_{j_{i-1}} α_{j_i} for a word s_{j_n} ... s_{j_1};
// element k of the result is α^(k+1).
std::vector<AffineRoot> root_chain(const RootSystem& rs, const Word& word);

// Symmetric reduced decomposition s_θ = s_{j_p} ... s_{j_0} ... s_{j_{-p}}
// with j_{-i} = j_i, and its chain α^(-p), ..., α^(p).
struct RootChain {
  Word word;                      // leftmost letter is j_p
  std::vector<RootVector> chain;  // chain[i + p] = α^(i)
  int p = 0;
  int j0 = 0;                     // letter of the simple long root reached from θ

  const RootVector& at(int i) const { return chain[static_cast<std::size_t>(i + p)]; }
  int letter(int i) const { return word[static_cast<std::size_t>(p - i)]; }
};

RootChain symmetric_decomposition_of_s_theta(const RootSystem& rs);
// s_0 followed by the symmetric word of s_θ.
Word reduced_word_tau_theta(const RootSystem& rs);

// ε(α, β) = -1 if (α, β) > 0 else 1
int epsilon(const RootSystem& rs, const RootVector& a, const RootVector& b);

}  // namespace gmult::weyl
