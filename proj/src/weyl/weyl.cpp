#include "gmult/weyl/weyl.hpp"

#include <algorithm>

#include "gmult/errors.hpp"

namespace gmult::weyl {

namespace {

bool root_negative(const RootVector& a) { return a.sum() < 0; }

void check_letter(const RootSystem& rs, int letter, bool allow_affine) {
  if (letter < (allow_affine ? 0 : 1) || letter > rs.rank())
    throw InvalidArgument("reflection index " + std::to_string(letter) + " out of range for " +
                          rs.label());
}

}  // namespace

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += "s" + std::to_string(w[i]);
  }
  return s;
}

bool AffineRoot::is_positive() const { return level > 0 || (level == 0 && root.sum() > 0); }

std::string AffineRoot::to_string() const {
  std::string s = root.to_string();
  if (level > 0) s += "+" + std::to_string(level) + "d";
  if (level < 0) s += std::to_string(level) + "d";
  return s;
}

// --- finite Weyl group --------------------------------------------------

WeylElement::WeylElement(const RootSystem& rs) : WeylElement(rs, rs.rho()) {}

WeylElement::WeylElement(const RootSystem& rs, Weight rho_image) : rho_image_(rho_image) {
  Weight v = rho_image;
  for (;;) {
    int i = 0;
    while (i < rs.rank() && v[i] >= 0) ++i;
    if (i == rs.rank()) break;
    word_.push_back(i + 1);
    v = rs.reflect(i, v);
  }
}

WeylElement WeylElement::simple(const RootSystem& rs, int letter) {
  check_letter(rs, letter, false);
  return WeylElement(rs, rs.reflect(letter - 1, rs.rho()));
}

WeylElement WeylElement::from_word(const RootSystem& rs, const Word& word) {
  Weight v = rs.rho();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    check_letter(rs, *it, false);
    v = rs.reflect(*it - 1, v);
  }
  return WeylElement(rs, v);
}

WeylElement WeylElement::reflection(const RootSystem& rs, const RootVector& beta) {
  return WeylElement(rs, rs.reflect(beta, rs.rho()));
}

Weight WeylElement::apply(const RootSystem& rs, const Weight& mu) const {
  Weight v = mu;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) v = rs.reflect(*it - 1, v);
  return v;
}

RootVector WeylElement::apply(const RootSystem& rs, const RootVector& a) const {
  RootVector v = a;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) v = rs.reflect(*it - 1, v);
  return v;
}

CorootVector WeylElement::apply(const RootSystem& rs, const CorootVector& l) const {
  CorootVector v = l;
  for (auto it = word_.rbegin(); it != word_.rend(); ++it) v = rs.reflect(*it - 1, v);
  return v;
}

WeylElement WeylElement::inverse(const RootSystem& rs) const {
  Word rev(word_.rbegin(), word_.rend());
  return from_word(rs, rev);
}

WeylElement WeylElement::compose(const RootSystem& rs, const WeylElement& o) const {
  return WeylElement(rs, apply(rs, o.rho_image_));
}

// --- extended affine Weyl group -----------------------------------------

ExtAffineWeylElement::ExtAffineWeylElement(const RootSystem& rs)
    : w_(rs), lambda_(rs.zero_coroot()) {}

ExtAffineWeylElement::ExtAffineWeylElement(WeylElement w, CorootVector lambda)
    : w_(std::move(w)), lambda_(lambda) {}

ExtAffineWeylElement ExtAffineWeylElement::simple(const RootSystem& rs, int letter) {
  check_letter(rs, letter, true);
  if (letter == 0)
    return {WeylElement::reflection(rs, rs.theta()), -rs.coroot(rs.theta())};
  return {WeylElement::simple(rs, letter), rs.zero_coroot()};
}

ExtAffineWeylElement ExtAffineWeylElement::from_word(const RootSystem& rs, const Word& word) {
  ExtAffineWeylElement e(rs);
  for (int letter : word) e = e.compose(rs, simple(rs, letter));
  return e;
}

ExtAffineWeylElement ExtAffineWeylElement::translation(const RootSystem& rs,
                                                       const CorootVector& lambda) {
  return {WeylElement(rs), lambda};
}

AffineRoot ExtAffineWeylElement::apply(const RootSystem& rs, const AffineRoot& a) const {
  return {w_.apply(rs, a.root), a.level - rs.pair(lambda_, a.root)};
}

std::pair<Weight, int> ExtAffineWeylElement::apply(const RootSystem& rs, const Weight& mu) const {
  return {w_.apply(rs, mu), rs.pair(lambda_, mu)};
}

ExtAffineWeylElement ExtAffineWeylElement::compose(const RootSystem& rs,
                                                   const ExtAffineWeylElement& o) const {
  // w1 τ(λ1) w2 τ(λ2) = w1 w2 τ(w2⁻¹ λ1 + λ2)
  WeylElement w2inv = o.w_.inverse(rs);
  return {w_.compose(rs, o.w_), w2inv.apply(rs, lambda_) + o.lambda_};
}

ExtAffineWeylElement ExtAffineWeylElement::inverse(const RootSystem& rs) const {
  return {w_.inverse(rs), -w_.apply(rs, lambda_)};
}

AffineRoot simple_affine_root(const RootSystem& rs, int letter) {
  check_letter(rs, letter, true);
  if (letter == 0) return {-rs.theta(), 1};
  return {RootVector::unit(rs.rank(), letter - 1), 0};
}

AffineRoot apply_letter(const RootSystem& rs, int letter, const AffineRoot& a) {
  check_letter(rs, letter, true);
  if (letter == 0) {
    // s_0 = s_θ τ(-θ∨)
    return {rs.reflect(rs.theta(), a.root), a.level + rs.pair(rs.to_weight(a.root), rs.theta())};
  }
  return {rs.reflect(letter - 1, a.root), a.level};
}

std::vector<AffineRoot> inversion_set(const RootSystem& rs, const ExtAffineWeylElement& w) {
  std::vector<AffineRoot> out;
  const auto& lambda = w.translation_part();
  for (const auto& a : rs.roots()) {
    int top = rs.pair(lambda, a);
    int start = a.sum() > 0 ? 0 : 1;
    for (int n = start; n <= top; ++n) {
      if (n < top || root_negative(w.finite_part().apply(rs, a))) out.push_back({a, n});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootVector> inversion_set(const RootSystem& rs, const WeylElement& w) {
  std::vector<RootVector> out;
  for (const auto& a : rs.positive_roots())
    if (root_negative(w.apply(rs, a))) out.push_back(a);
  return out;
}

int length(const RootSystem& rs, const ExtAffineWeylElement& w) {
  return static_cast<int>(inversion_set(rs, w).size());
}

Word reduced_word(const RootSystem& rs, const ExtAffineWeylElement& w) {
  Word rev;
  ExtAffineWeylElement cur = w;
  for (;;) {
    int found = -1;
    for (int i = 0; i <= rs.rank() && found < 0; ++i)
      if (!cur.apply(rs, simple_affine_root(rs, i)).is_positive()) found = i;
    if (found < 0) break;
    rev.push_back(found);
    cur = cur.compose(rs, ExtAffineWeylElement::simple(rs, found));
  }
  if (!(cur == ExtAffineWeylElement(rs)))
    throw UnsupportedFeature("element has a zero-length component outside the affine Weyl group");
  return Word(rev.rbegin(), rev.rend());
}

bool is_reduced(const RootSystem& rs, const Word& word) {
  return length(rs, ExtAffineWeylElement::from_word(rs, word)) == static_cast<int>(word.size());
}

std::vector<AffineRoot> root_chain(const RootSystem& rs, const Word& word) {
  const std::size_t n = word.size();
  std::vector<AffineRoot> chain;
  chain.reserve(n);
  // j_k = word[n - k]
  for (std::size_t i = 1; i <= n; ++i) {
    AffineRoot a = simple_affine_root(rs, word[n - i]);
    for (std::size_t k = i - 1; k >= 1; --k) a = apply_letter(rs, word[n - k], a);
    chain.push_back(a);
  }
  return chain;
}

RootChain symmetric_decomposition_of_s_theta(const RootSystem& rs) {
  RootVector cur = rs.theta();
  Word descent;
  for (;;) {
    if (cur.sum() == 1) break;
    Weight cw = rs.to_weight(cur);
    int pick = -1;
    for (int i = 0; i < rs.rank() && pick < 0; ++i)
      if (cw[i] > 0 && cur != RootVector::unit(rs.rank(), i)) pick = i;
    cur = rs.reflect(pick, cur);
    descent.push_back(pick + 1);
  }
  int j0 = 0;
  for (int i = 0; i < rs.rank(); ++i)
    if (cur[i] == 1) j0 = i + 1;
  RootChain rc;
  rc.p = static_cast<int>(descent.size());
  rc.j0 = j0;
  // descent = i_1..i_p, s_θ = s_{i_1} ... s_{i_p} s_{j0} s_{i_p} ... s_{i_1}
  rc.word = descent;
  rc.word.push_back(j0);
  rc.word.insert(rc.word.end(), descent.rbegin(), descent.rend());
  for (const auto& a : root_chain(rs, rc.word)) rc.chain.push_back(a.root);
  return rc;
}

Word reduced_word_tau_theta(const RootSystem& rs) {
  Word w{0};
  auto rc = symmetric_decomposition_of_s_theta(rs);
  w.insert(w.end(), rc.word.begin(), rc.word.end());
  return w;
}

int epsilon(const RootSystem& rs, const RootVector& a, const RootVector& b) {
  return rs.inner(a, b) > 0 ? -1 : 1;
}

}  // namespace gmult::weyl
