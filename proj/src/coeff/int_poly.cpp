#include "gmult/coeff/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "gmult/errors.hpp"

namespace gmult::coeff {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw BudgetExceeded("integer coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw BudgetExceeded("integer coefficient overflow");
  return r;
}

IntPoly::IntPoly(std::int64_t c) {
  if (c != 0) coeffs_.push_back(c);
}

IntPoly IntPoly::monomial(int degree, std::int64_t c) {
  IntPoly p(c);
  if (c != 0) p.low_ = degree;
  return p;
}

IntPoly IntPoly::from_map(const std::map<int, std::int64_t>& coeffs) {
  IntPoly p;
  for (const auto& [d, c] : coeffs) p.add_scaled(IntPoly(1), c, d);
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
}

std::int64_t IntPoly::operator[](int degree) const {
  if (is_zero() || degree < low_ || degree > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree - low_)];
}

std::map<int, std::int64_t> IntPoly::to_map() const {
  std::map<int, std::int64_t> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out[low_ + static_cast<int>(i)] = coeffs_[i];
  return out;
}

bool IntPoly::has_negative_coefficient() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c < 0; });
}

std::int64_t IntPoly::eval_at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c);
  return s;
}

IntPoly IntPoly::negate_q() const {
  IntPoly p = *this;
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    if ((low_ + static_cast<int>(i)) % 2 != 0) p.coeffs_[i] = -p.coeffs_[i];
  return p;
}

IntPoly IntPoly::shifted(int by) const {
  IntPoly p = *this;
  if (!p.is_zero()) p.low_ += by;
  return p;
}

IntPoly IntPoly::operator-() const {
  IntPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

void IntPoly::add_scaled(const IntPoly& o, std::int64_t c, int shift) {
  if (o.is_zero() || c == 0) return;
  int olow = o.low_ + shift;
  int ohigh = o.high_degree() + shift;
  if (is_zero()) {
    low_ = olow;
    coeffs_.assign(o.coeffs_.size(), 0);
  } else {
    int nlow = std::min(low_, olow);
    int nhigh = std::max(high_degree(), ohigh);
    if (nlow < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - nlow), 0);
    low_ = nlow;
    coeffs_.resize(static_cast<std::size_t>(nhigh - nlow + 1), 0);
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    auto& slot = coeffs_[static_cast<std::size_t>(olow - low_) + i];
    slot = checked_add(slot, checked_mul(c, o.coeffs_[i]));
  }
  trim();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  add_scaled(o, 1, 0);
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  add_scaled(o, -1, 0);
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
  }
  r.trim();
  return r;
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("IntPoly::divide_exact");
  IntPoly rest = *this;
  IntPoly quotient;
  const std::int64_t lead = d.coeffs_.back();
  while (!rest.is_zero()) {
    if (rest.high_degree() - d.high_degree() < low_ - d.low_)
      throw MathError("polynomial division leaves a remainder");
    std::int64_t top = rest.coeffs_.back();
    if (top % lead != 0) throw MathError("polynomial division leaves a remainder");
    int shift = rest.high_degree() - d.high_degree();
    quotient.add_scaled(IntPoly(1), top / lead, shift);
    rest.add_scaled(d, -(top / lead), shift);
  }
  return quotient;
}

namespace {

std::string render(const IntPoly& p, bool latex) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = p.low_degree(); d <= p.high_degree(); ++d) {
    std::int64_t c = p[d];
    if (c == 0) continue;
    std::int64_t a = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      out << a;
      continue;
    }
    if (a != 1) out << a << (latex ? "" : "*");
    out << "q";
    if (d != 1) {
      if (latex)
        out << "^{" << d << "}";
      else
        out << "^" << d;
    }
  }
  return out.str();
}

}  // namespace

std::string IntPoly::to_string() const { return render(*this, false); }
std::string IntPoly::to_latex() const { return render(*this, true); }

}  // namespace gmult::coeff
