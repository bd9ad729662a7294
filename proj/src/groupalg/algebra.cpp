#include "gmult/groupalg/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gmult/errors.hpp"

namespace gmult::groupalg {

using coeff::BigRational;
using coeff::LaurentPoly;

AlgebraElement AlgebraElement::exp(const Weight& mu, const QtScalar& c) {
  AlgebraElement f;
  f.add_term(mu, c);
  return f;
}

AlgebraElement AlgebraElement::constant(const Weight& zero, const QtScalar& c) {
  return exp(zero, c);
}

QtScalar AlgebraElement::coeff(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? QtScalar() : it->second;
}

void AlgebraElement::add_term(const Weight& mu, const QtScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement f = *this;
  for (auto& [mu, c] : f.terms_) c = -c;
  return f;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [mu, c] : o.terms_) add_term(mu, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const QtScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, x] : terms_) x *= c;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  for (const auto& [mu, x] : a.terms_)
    for (const auto& [nu, y] : b.terms_) r.add_term(mu + nu, x * y);
  return r;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    std::string s = c.to_string();
    bool simple = c.num().size() == 1 && c.den() == LaurentPoly(1);
    // rational constants print with a binary minus so the output parses back
    bool negative = simple && s[0] == '-';
    if (negative) s.erase(0, 1);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (s != "1") out << (simple ? s : "(" + s + ")") << "*";
    out << "e" << mu.to_string();
  }
  return out.str();
}

AlgebraElement bar(const AlgebraElement& f) {
  AlgebraElement r;
  for (const auto& [mu, c] : f.terms()) r.add_term(-mu, c);
  return r;
}

AlgebraElement iota_coeffs(const AlgebraElement& f) {
  AlgebraElement r;
  for (const auto& [mu, c] : f.terms()) r.add_term(mu, coeff::iota(c));
  return r;
}

AlgebraElement specialize(const AlgebraElement& f, coeff::Specialization s) {
  AlgebraElement r;
  for (const auto& [mu, c] : f.terms()) r.add_term(mu, coeff::specialize(c, s));
  return r;
}

AlgebraElement act_simple(const RootSystem& rs, int i, const AlgebraElement& f) {
  AlgebraElement r;
  for (const auto& [mu, c] : f.terms()) r.add_term(rs.reflect(i - 1, mu), c);
  return r;
}

AlgebraElement act_weyl(const RootSystem& rs, const weyl::WeylElement& w, const AlgebraElement& f) {
  AlgebraElement r;
  for (const auto& [mu, c] : f.terms()) r.add_term(w.apply(rs, mu), c);
  return r;
}

AlgebraElement act_affine(const RootSystem& rs, const weyl::ExtAffineWeylElement& w,
                          const AlgebraElement& f) {
  // λ ∈ Q∨ by construction of ExtAffineWeylElement, so q-powers are integral.
  AlgebraElement r;
  for (const auto& [mu, c] : f.terms()) {
    auto [image, qexp] = w.apply(rs, mu);
    r.add_term(image, qexp == 0 ? c : c * QtScalar::q_pow(qexp));
  }
  return r;
}

QtScalar constant_term(const AlgebraElement& f) {
  for (const auto& [mu, c] : f.terms())
    if (mu.is_zero()) return c;
  return QtScalar();
}

bool is_w_invariant(const RootSystem& rs, const AlgebraElement& f) {
  for (int i = 1; i <= rs.rank(); ++i)
    if (!(act_simple(rs, i, f) == f)) return false;
  return true;
}

AlgebraElement orbit_sum(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw InvalidArgument("orbit_sum: weight " + lambda.to_string() + " is not dominant");
  AlgebraElement r;
  for (const auto& mu : rs.weyl_orbit(lambda)) r.add_term(mu, QtScalar(1));
  return r;
}

namespace {

void skip_space(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

[[noreturn]] void parse_error(const std::string& text, const std::string& why) {
  throw InvalidArgument("cannot parse '" + text + "': " + why);
}

Weight parse_bracket(const RootSystem& rs, const std::string& text, std::size_t& i) {
  if (i >= text.size() || text[i] != '[') parse_error(text, "expected '['");
  ++i;
  std::vector<int> xs;
  for (;;) {
    skip_space(text, i);
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) parse_error(text, "expected integer coordinate");
    xs.push_back(std::stoi(text.substr(start, i - start)));
    skip_space(text, i);
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') {
      ++i;
      break;
    }
    parse_error(text, "expected ',' or ']'");
  }
  if (static_cast<int>(xs.size()) != rs.rank())
    parse_error(text, "weight needs " + std::to_string(rs.rank()) + " coordinates");
  return Weight::from(xs);
}

}  // namespace

Weight parse_weight(const RootSystem& rs, const std::string& text) {
  std::size_t i = 0;
  skip_space(text, i);
  if (i < text.size() && text[i] == 'e') ++i;
  Weight w = parse_bracket(rs, text, i);
  skip_space(text, i);
  if (i != text.size()) parse_error(text, "trailing characters");
  return w;
}

AlgebraElement parse_element(const RootSystem& rs, const std::string& text) {
  AlgebraElement f;
  std::size_t i = 0;
  bool first = true;
  for (;;) {
    skip_space(text, i);
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_space(text, i);
    } else if (!first) {
      parse_error(text, "expected '+' or '-'");
    }
    first = false;
    BigRational c = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
        ++i;
      c = BigRational(text.substr(start, i - start));
      c.canonicalize();
      skip_space(text, i);
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_space(text, i);
      } else {
        f.add_term(rs.zero_weight(), QtScalar(c * sign));
        continue;
      }
    }
    if (i >= text.size() || text[i] != 'e') parse_error(text, "expected 'e['");
    ++i;
    Weight w = parse_bracket(rs, text, i);
    f.add_term(w, QtScalar(c * sign));
  }
  return f;
}

// ---------------------------------------------------------------------------

PolyCharacter::PolyCharacter(const Weight& zero) { terms_.emplace(zero, IntPoly(1)); }

IntPoly PolyCharacter::coeff(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? IntPoly() : it->second;
}

void PolyCharacter::multiply_binomial(const Weight& beta, int a, std::int64_t c) {
  Map next;
  next.reserve(terms_.size() * 2);
  for (const auto& [mu, p] : terms_) next[mu] += p;
  for (const auto& [mu, p] : terms_) next[mu + beta].add_scaled(p, c, a);
  for (auto it = next.begin(); it != next.end();) {
    if (it->second.is_zero())
      it = next.erase(it);
    else
      ++it;
  }
  terms_ = std::move(next);
}

void PolyCharacter::multiply_scalar(const IntPoly& p) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * p;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

coeff::BigInt PolyCharacter::total_mass() const {
  coeff::BigInt s = 0;
  for (const auto& [mu, p] : terms_)
    for (const auto& [d, c] : p.to_map()) s += coeff::BigInt(static_cast<long>(c));
  return s;
}

std::vector<Weight> PolyCharacter::sorted_support() const {
  std::vector<Weight> out;
  out.reserve(terms_.size());
  for (const auto& [mu, p] : terms_) out.push_back(mu);
  std::sort(out.begin(), out.end());
  return out;
}

QtScalar to_qt(const IntPoly& p) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [d, c] : p.to_map()) terms.push_back({{d, 0}, BigRational(c)});
  return QtScalar(LaurentPoly::from_terms(std::move(terms)), LaurentPoly(1), 1);
}

AlgebraElement PolyCharacter::to_algebra() const {
  AlgebraElement f;
  for (const auto& [mu, p] : terms_) f.add_term(mu, to_qt(p));
  return f;
}

}  // namespace gmult::groupalg
