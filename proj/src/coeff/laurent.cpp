#include "gmult/coeff/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace gmult::coeff {

std::string to_string(const BigRational& x) { return x.get_str(); }

LaurentPoly::LaurentPoly(long c) : LaurentPoly(BigRational(c)) {}

LaurentPoly::LaurentPoly(const BigRational& c) {
  if (c != 0) terms_.push_back({{0, 0}, c});
}

LaurentPoly LaurentPoly::monomial(Monomial m, const BigRational& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void LaurentPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& term : terms_) {
    if (!out.empty() && out.back().mono == term.mono) {
      out.back().coeff += term.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(term));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == Monomial{});
}

bool LaurentPoly::has_t() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& x) { return x.mono.t != 0; });
}

Monomial LaurentPoly::min_exponents() const {
  if (terms_.empty()) return {};
  Monomial m = terms_.front().mono;
  for (const auto& term : terms_) {
    m.v = std::min(m.v, term.mono.v);
    m.t = std::min(m.t, term.mono.t);
  }
  return m;
}

LaurentPoly LaurentPoly::shifted(Monomial by) const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.mono = term.mono + by;
  return p;
}

LaurentPoly LaurentPoly::inverted() const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.mono = {-term.mono.v, -term.mono.t};
  return from_terms(std::move(t));
}

LaurentPoly LaurentPoly::scale_v(int factor) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) term.mono.v *= factor;
  return from_terms(std::move(t));
}

LaurentPoly LaurentPoly::substitute_t(int v_power) const {
  std::vector<Term> t = terms_;
  for (auto& term : t) {
    term.mono.v += term.mono.t * v_power;
    term.mono.t = 0;
  }
  return from_terms(std::move(t));
}

int LaurentPoly::v_exponent_gcd() const {
  int g = 0;
  for (const auto& term : terms_) g = std::gcd(g, term.mono.v);
  return g;
}

LaurentPoly LaurentPoly::divide_v_exponents(int d) const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.mono.v /= d;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.coeff = -term.coeff;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono < a->mono) {
      out.push_back(*b++);
    } else {
      BigRational c = a->coeff + b->coeff;
      if (c != 0) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.mono + y.mono, x.coeff * y.coeff});
  return LaurentPoly::from_terms(std::move(prod));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.coeff *= c;
  return *this;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

namespace {

std::string q_power(int a, int m) {
  int g = std::gcd(a < 0 ? -a : a, m);
  int num = a / g;
  int den = m / g;
  if (den == 1) return num == 1 ? "q" : "q^" + std::to_string(num);
  return "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

std::string monomial_string(Monomial mono, int m) {
  std::string s;
  if (mono.v != 0) s = q_power(mono.v, m);
  if (mono.t != 0) {
    if (!s.empty()) s += "*";
    s += mono.t == 1 ? "t" : "t^" + std::to_string(mono.t);
  }
  return s;
}

}  // namespace

std::string LaurentPoly::to_string(int m) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    BigRational c = it->coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_string(it->mono, m);
    if (mono.empty()) {
      out << c.get_str();
    } else if (c == 1) {
      out << mono;
    } else {
      out << c.get_str() << "*" << mono;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// gcd over Q[v][t]: t is the main variable, coefficients are dense
// univariate polynomials in v. Primitive pseudo-remainder sequence.

namespace {

using UPoly = std::vector<BigRational>;  // ascending powers of v
using RPoly = std::vector<UPoly>;        // ascending powers of t

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(RPoly& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// a = q*b + r
void divmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r) {
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  const BigRational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    BigRational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  r = std::move(a);
}

void make_monic(UPoly& p) {
  if (p.empty()) return;
  BigRational lead = p.back();
  for (auto& c : p) c /= lead;
}

// Euclid over Q swells the rationals badly; run a primitive remainder
// sequence over Z instead.
using ZPoly = std::vector<mpz_class>;

ZPoly primitive_integer(const UPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly z;
  z.reserve(p.size());
  mpz_class g = 0;
  for (const auto& c : p) {
    z.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g != 0 && g != 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return z;
}

void zprimitive(ZPoly& z) {
  while (!z.empty() && z.back() == 0) z.pop_back();
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0 && g != 1)
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly zpseudo_remainder(ZPoly a, const ZPoly& b) {
  const mpz_class& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    mpz_class la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
    zprimitive(a);
  }
  return a;
}

UPoly ugcd(const UPoly& x, const UPoly& y) {
  ZPoly a = primitive_integer(x);
  ZPoly b = primitive_integer(y);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = zpseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  UPoly g(a.begin(), a.end());
  make_monic(g);
  return g;
}

UPoly content(const RPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.empty()) continue;
    g = g.empty() ? c : ugcd(g, c);
    if (g.size() == 1) break;
  }
  make_monic(g);
  return g;
}

RPoly divide_content(const RPoly& p, const UPoly& c) {
  RPoly out;
  out.reserve(p.size());
  for (const auto& x : p) {
    UPoly q, r;
    if (x.empty()) {
      out.push_back({});
      continue;
    }
    divmod(x, c, q, r);
    out.push_back(std::move(q));
  }
  return out;
}

RPoly primitive_part(const RPoly& p) { return divide_content(p, content(p)); }

RPoly pseudo_remainder(RPoly a, const RPoly& b) {
  const UPoly& lead = b.back();
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    UPoly la = a.back();
    std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = mul(c, lead);
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = sub(a[shift + i], mul(la, b[i]));
    trim(a);
  }
  return a;
}

RPoly to_rpoly(const LaurentPoly& p) {
  RPoly r;
  for (const auto& term : p.terms()) {
    auto t = static_cast<std::size_t>(term.mono.t);
    auto v = static_cast<std::size_t>(term.mono.v);
    if (r.size() <= t) r.resize(t + 1);
    if (r[t].size() <= v) r[t].resize(v + 1, 0);
    r[t][v] = term.coeff;
  }
  return r;
}

LaurentPoly from_rpoly(const RPoly& r) {
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t t = 0; t < r.size(); ++t)
    for (std::size_t v = 0; v < r[t].size(); ++v)
      if (r[t][v] != 0)
        terms.push_back({{static_cast<int>(v), static_cast<int>(t)}, r[t][v]});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly normalized_lead(LaurentPoly p) {
  if (p.is_zero()) return p;
  BigRational lead = p.leading_term().coeff;
  p *= BigRational(1) / lead;
  return p;
}

}  // namespace

LaurentPoly polynomial_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return normalized_lead(b);
  if (b.is_zero()) return normalized_lead(a);
  if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
  RPoly x = to_rpoly(a);
  RPoly y = to_rpoly(b);
  UPoly c = ugcd(content(x), content(y));
  x = primitive_part(x);
  y = primitive_part(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    RPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    if (r.empty()) break;
    y = primitive_part(r);
  }
  x = primitive_part(x);
  for (auto& coeff : x) coeff = mul(coeff, c);
  trim(x);
  return normalized_lead(from_rpoly(x));
}

bool exact_divide(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quotient) {
  if (b.is_zero()) return false;
  quotient = LaurentPoly();
  if (a.is_zero()) return true;
  if (b.is_monomial()) {
    const auto& lead = b.leading_term();
    quotient = a.shifted(Monomial{} - lead.mono);
    quotient *= BigRational(1) / lead.coeff;
    return true;
  }
  // Move both into Q[v,t] and run the one-divisor division algorithm in lex
  // order; with b | a every leading term is divisible by that of b.
  Monomial amin = a.min_exponents();
  Monomial bmin = b.min_exponents();
  LaurentPoly rest = a.shifted(Monomial{} - amin);
  LaurentPoly den = b.shifted(Monomial{} - bmin);
  const auto lead = den.leading_term();
  std::vector<LaurentPoly::Term> q;
  while (!rest.is_zero()) {
    const auto& top = rest.leading_term();
    Monomial m = top.mono - lead.mono;
    if (m.v < 0 || m.t < 0) return false;
    BigRational c = top.coeff / lead.coeff;
    LaurentPoly step = den.shifted(m);
    step *= c;
    rest -= step;
    q.push_back({m + amin - bmin, c});
  }
  quotient = LaurentPoly::from_terms(std::move(q));
  return true;
}

}  // namespace gmult::coeff
