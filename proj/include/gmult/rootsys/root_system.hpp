#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gmult/coeff/laurent.hpp"
#include "gmult/rootsys/lattice.hpp"

namespace gmult::rootsys {

struct CartanType {
  char letter = 'A';
  int rank = 1;

  std::string label() const { return std::string(1, letter) + std::to_string(rank); }
  // Accepts "G2", "b3", ...; throws InvalidArgument for anything else.
  static CartanType parse(const std::string& label);
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

struct Heights {
  int ht = 0;
  int ht_l = 0;
  int ht_s = 0;
};

struct ExponentData {
  std::vector<int> m_partition;   // m(n) for n = 1..ht θ
  std::vector<int> d;             // exponents, ascending
  std::vector<int> m_s_partition; // m_s(n), empty when simply laced
  std::vector<int> d_s;           // short exponents, ascending
  int r_l = 0;
  int r_s = 0;
};

class RootSystem {
 public:
  explicit RootSystem(CartanType type);
  static std::shared_ptr<const RootSystem> build(const std::string& label);

  const CartanType& type() const { return type_; }
  std::string label() const { return type_.label(); }
  int rank() const { return type_.rank; }

  // C[i][j] = (α_j, α_i∨)
  int cartan(int i, int j) const { return cartan_[i][j]; }
  // B[i][j] = (α_i, α_j), short roots of squared length 2.
  int gram(int i, int j) const { return gram_[i][j]; }
  bool simply_laced() const { return !lambda_.has_value(); }
  // Λ = (long, long) / (short, short); empty for simply laced types.
  std::optional<int> lambda_ratio() const { return lambda_; }
  bool simple_is_long(int i) const;

  const std::vector<RootVector>& roots() const { return roots_; }
  const std::vector<RootVector>& positive_roots() const { return positive_; }
  // Weight coordinates of roots()[k] / positive_roots()[k].
  const std::vector<Weight>& root_weights() const { return root_weights_; }
  const std::vector<Weight>& positive_root_weights() const { return positive_weights_; }
  bool is_root(const RootVector& v) const;
  std::optional<std::size_t> root_index(const RootVector& v) const;

  const RootVector& theta() const { return theta_; }
  const std::optional<RootVector>& theta_s() const { return theta_s_; }

  // Smallest m with mP ⊆ Q.
  int m() const { return m_; }
  std::uint64_t weyl_order() const { return weyl_order_; }
  int dim_g() const { return rank() + static_cast<int>(roots_.size()); }

  int norm2(const RootVector& a) const { return inner(a, a); }
  int inner(const RootVector& a, const RootVector& b) const;
  bool is_long(const RootVector& a) const;
  bool is_short(const RootVector& a) const;
  Heights heights(const RootVector& a) const;
  int L() const { return heights(theta_).ht_l; }
  int S() const { return heights(theta_).ht_s; }

  Weight to_weight(const RootVector& a) const;
  // Simple-root coordinates when μ ∈ Q.
  std::optional<RootVector> to_root(const Weight& mu) const;
  bool in_root_lattice(const Weight& mu) const { return to_root(mu).has_value(); }
  // Rational simple-root coordinates: numerators over root_coord_denominator().
  std::vector<std::int64_t> root_coords_scaled(const Weight& mu) const;
  int root_coord_denominator() const { return cinv_den_; }

  CorootVector coroot(const RootVector& a) const;
  // (μ, β∨)
  int pair(const Weight& mu, const RootVector& beta) const;
  // (λ, μ) for λ ∈ Q∨
  int pair(const CorootVector& lambda, const Weight& mu) const;
  // (λ, β) for λ ∈ Q∨ and β ∈ Q
  int pair(const CorootVector& lambda, const RootVector& beta) const;
  // (μ, ν) on P as an exact rational
  coeff::BigRational inner(const Weight& a, const Weight& b) const;
  // inner_scale() * (μ, ν), always an integer
  std::int64_t inner_scaled(const Weight& a, const Weight& b) const;
  std::int64_t inner_scale() const { return inner_scale_; }

  const Weight& simple_root_weight(int i) const { return simple_weights_[i]; }
  Weight rho() const;
  Weight zero_weight() const { return Weight(rank()); }
  RootVector zero_root() const { return RootVector(rank()); }
  CorootVector zero_coroot() const { return CorootVector(rank()); }

  Weight reflect(int i, const Weight& mu) const;
  RootVector reflect(int i, const RootVector& a) const;
  CorootVector reflect(int i, const CorootVector& l) const;
  // s_β applied to a weight / a root
  Weight reflect(const RootVector& beta, const Weight& mu) const;
  RootVector reflect(const RootVector& beta, const RootVector& a) const;
  CorootVector reflect(const RootVector& beta, const CorootVector& l) const;

  bool is_dominant(const Weight& mu) const;
  Weight dominant_representative(const Weight& mu) const;
  // μ ≤ ν in the dominance order (ν − μ ∈ Q⁺)
  bool dominance_leq(const Weight& mu, const Weight& nu) const;
  // BFS orbit, sorted; throws BudgetExceeded past `limit` elements.
  std::vector<Weight> weyl_orbit(const Weight& mu, std::size_t limit = 5'000'000) const;

  const ExponentData& exponents() const { return exponents_; }

 private:
  void build_cartan();
  void build_roots();
  void build_inverse();
  void build_exponents();

  CartanType type_;
  std::vector<std::vector<int>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::optional<int> lambda_;
  std::vector<RootVector> roots_;
  std::vector<RootVector> positive_;
  std::vector<Weight> root_weights_;
  std::vector<Weight> positive_weights_;
  std::vector<Weight> simple_weights_;
  RootVector theta_;
  std::optional<RootVector> theta_s_;
  std::vector<std::vector<std::int64_t>> cinv_num_;  // C^{-1} * cinv_den_
  int cinv_den_ = 1;
  std::vector<std::vector<std::int64_t>> omega_gram_;  // inner_scale_ * (ω_i, ω_j)
  std::int64_t inner_scale_ = 1;
  int m_ = 1;
  std::uint64_t weyl_order_ = 1;
  ExponentData exponents_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

// Number of roots and Weyl group order from the classification tables.
std::size_t classification_root_count(const CartanType& t);
std::uint64_t classification_weyl_order(const CartanType& t);

}  // namespace gmult::rootsys
