#include "gmult/hecke/hecke.hpp"

#include <sstream>

#include "gmult/errors.hpp"

namespace gmult::hecke {

using coeff::QtScalar;
using rootsys::Weight;

AlgebraElement apply_G(const RootSystem& rs, const AffineRoot& a, const AlgebraElement& f) {
  const QtScalar t = QtScalar::t_pow(1);
  const QtScalar tinv = QtScalar::t_pow(-1);
  const QtScalar h = QtScalar::h();
  const Weight step = rs.to_weight(a.root);
  AlgebraElement r;
  for (const auto& [mu, c] : f.terms()) {
    int k = rs.pair(mu, a.root);
    int eps = k > 0 ? -1 : 1;
    r.add_term(mu, c * (eps > 0 ? t : tinv));
    int count = (k < 0 ? -k : k) + (eps - 1) / 2;
    if (count <= 0) continue;
    QtScalar hc = c * h;
    if (eps < 0) hc = -hc;
    Weight nu = mu;
    for (int i = 1; i <= count; ++i) {
      nu = eps > 0 ? nu + step : nu - step;
      int qexp = -i * eps * a.level;
      r.add_term(nu, qexp == 0 ? hc : hc * QtScalar::q_pow(qexp));
    }
  }
  return r;
}

AlgebraElement apply_T(const RootSystem& rs, int i, const AlgebraElement& f) {
  AlgebraElement g = apply_G(rs, weyl::simple_affine_root(rs, i), f);
  return groupalg::act_affine(rs, weyl::ExtAffineWeylElement::simple(rs, i), g);
}

AlgebraElement apply_T_inverse(const RootSystem& rs, int i, const AlgebraElement& f) {
  return apply_T(rs, i, f) - f * QtScalar::h();
}

AlgebraElement HeckeOperator::apply(const RootSystem& rs, const AlgebraElement& f) const {
  AlgebraElement cur = f;
  for (const auto& step : steps_) {
    cur = std::visit(
        [&](const auto& s) -> AlgebraElement {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, TStep>)
            return apply_T(rs, s.i, cur);
          else if constexpr (std::is_same_v<S, TInverseStep>)
            return apply_T_inverse(rs, s.i, cur);
          else if constexpr (std::is_same_v<S, GStep>)
            return apply_G(rs, s.root, cur);
          else if constexpr (std::is_same_v<S, WStep>)
            return groupalg::act_affine(rs, s.w, cur);
          else
            return cur * s.c;
        },
        step);
  }
  return cur;
}

HeckeOperator HeckeOperator::after(const HeckeOperator& inner) const {
  std::vector<Step> steps = inner.steps_;
  steps.insert(steps.end(), steps_.begin(), steps_.end());
  return HeckeOperator(std::move(steps));
}

std::string HeckeOperator::describe() const {
  // Printed left to right as an operator product.
  std::vector<std::string> parts;
  for (const auto& step : steps_) {
    parts.push_back(std::visit(
        [](const auto& s) -> std::string {
          using S = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<S, TStep>)
            return "T" + std::to_string(s.i);
          else if constexpr (std::is_same_v<S, TInverseStep>)
            return "T" + std::to_string(s.i) + "^-1";
          else if constexpr (std::is_same_v<S, GStep>)
            return "G(" + s.root.to_string() + ")";
          else if constexpr (std::is_same_v<S, WStep>)
            return "w(" + weyl::word_to_string(s.w.finite_part().reduced_word()) + "; tau" +
                   s.w.translation_part().to_string() + ")";
          else
            return "(" + s.c.to_string() + ")";
        },
        step));
  }
  std::string out;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    if (!out.empty()) out += " ";
    out += *it;
  }
  return out.empty() ? "1" : out;
}

HeckeOperator build_T_of_w(const RootSystem& rs, const Word& word) {
  if (!weyl::is_reduced(rs, word))
    throw InvalidArgument("word '" + weyl::word_to_string(word) + "' is not reduced");
  std::vector<Step> steps;
  for (const auto& a : weyl::root_chain(rs, word)) steps.push_back(GStep{a});
  if (!word.empty()) steps.push_back(WStep{weyl::ExtAffineWeylElement::from_word(rs, word)});
  return HeckeOperator(std::move(steps));
}

HeckeOperator build_T_product(const RootSystem& rs, const Word& word) {
  std::vector<Step> steps;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it > rs.rank()) throw InvalidArgument("letter out of range in T product");
    steps.push_back(TStep{*it});
  }
  return HeckeOperator(std::move(steps));
}

HeckeOperator build_T_inverse(const RootSystem& rs, const Word& word) {
  if (!weyl::is_reduced(rs, word))
    throw InvalidArgument("word '" + weyl::word_to_string(word) + "' is not reduced");
  std::vector<Step> steps;
  for (int letter : word) steps.push_back(TInverseStep{letter});
  return HeckeOperator(std::move(steps));
}

HeckeOperator build_Y_theta_dual(const RootSystem& rs) {
  return build_T_of_w(rs, weyl::reduced_word_tau_theta(rs));
}

HeckeOperator build_Y_minus_theta_dual(const RootSystem& rs) {
  return build_T_inverse(rs, weyl::reduced_word_tau_theta(rs));
}

HeckeOperator build_Y(const RootSystem& rs, const rootsys::CorootVector& lambda) {
  for (int i = 0; i < rs.rank(); ++i)
    if (rs.pair(lambda, rootsys::RootVector::unit(rs.rank(), i)) < 0)
      throw InvalidArgument("Y^lambda needs a dominant coweight, got " + lambda.to_string());
  auto word = weyl::reduced_word(rs, weyl::ExtAffineWeylElement::translation(rs, lambda));
  return build_T_of_w(rs, word);
}

PropositionForms proposition_expected(const RootSystem& rs) {
  const Weight zero = rs.zero_weight();
  const QtScalar h = QtScalar::h();
  auto e = [&](const rootsys::RootVector& a) { return AlgebraElement::exp(rs.to_weight(a)); };
  PropositionForms out;
  const auto& theta = rs.theta();
  if (rs.type().letter == 'G') {
    const auto& ths = *rs.theta_s();
    rootsys::RootVector a1{1, 0}, beta{1, 1};
    out.on_zero = AlgebraElement::exp(zero, QtScalar::t_pow(6));
    out.on_theta = e(theta) * QtScalar::qt(2, -6) - (e(ths) + e(beta)) * (h * QtScalar::qt(1, -3)) -
                   (e(a1) + e(-a1)) * (h * QtScalar::t_pow(-1)) -
                   AlgebraElement::exp(zero, h * (QtScalar::qt(1, -5) + QtScalar::t_pow(-1)));
    out.on_theta_s =
        e(ths) * QtScalar::qt(1, -4) - AlgebraElement::exp(zero, h * QtScalar::t_pow(1));
    return out;
  }
  const int L = rs.L();
  const int S = rs.S();
  out.on_zero = AlgebraElement::exp(zero, QtScalar::t_pow(2 * L + S));
  AlgebraElement shorts;
  for (const auto& a : rs.positive_roots())
    if (rs.is_short(a) && rs.inner(a, theta) != 0) shorts += e(a);
  out.on_theta = e(theta) * QtScalar::qt(2, -(2 * L + S)) - shorts * (h * QtScalar::qt(1, -(L + S))) -
                 AlgebraElement::exp(zero, h * QtScalar::t_pow(-S + 1) *
                                               (QtScalar::qt(1, -2 * L) + QtScalar(1)));
  if (rs.theta_s())
    out.on_theta_s = e(*rs.theta_s()) * QtScalar::qt(1, -S) -
                     AlgebraElement::exp(zero, h * QtScalar::t_pow(L - S + 2));
  return out;
}

}  // namespace gmult::hecke
