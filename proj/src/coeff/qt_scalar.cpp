#include "gmult/coeff/qt_scalar.hpp"

#include <numeric>
#include <utility>

#include "gmult/errors.hpp"

namespace gmult::coeff {

QtScalar::QtScalar(LaurentPoly num, LaurentPoly den, int m)
    : num_(std::move(num)), den_(std::move(den)), m_(m) {
  if (m_ <= 0) throw InvalidArgument("QtScalar: m must be positive");
  normalize();
}

QtScalar QtScalar::q_power(const BigRational& exponent) {
  BigRational e = exponent;
  e.canonicalize();
  int m = static_cast<int>(e.get_den().get_si());
  int a = static_cast<int>(e.get_num().get_si());
  return QtScalar(LaurentPoly::monomial({a, 0}), LaurentPoly(1), m);
}

QtScalar QtScalar::t_pow(int e) { return QtScalar(LaurentPoly::monomial({0, e}), LaurentPoly(1), 1); }

QtScalar QtScalar::qt(int q_exp, int t_exp, long coeff) {
  return QtScalar(LaurentPoly::monomial({q_exp, t_exp}, coeff), LaurentPoly(1), 1);
}

QtScalar QtScalar::h() {
  return QtScalar(LaurentPoly::monomial({0, 1}) - LaurentPoly::monomial({0, -1}), LaurentPoly(1), 1);
}

bool QtScalar::is_one() const { return den_ == LaurentPoly(1) && num_ == LaurentPoly(1); }

void QtScalar::normalize() {
  if (den_.is_zero()) throw DivisionByZero("QtScalar denominator");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    m_ = 1;
    return;
  }
  Monomial shift = Monomial{} - den_.min_exponents();
  den_ = den_.shifted(shift);
  num_ = num_.shifted(shift);
  if (!den_.is_constant()) {
    LaurentPoly num_poly = num_.shifted(Monomial{} - num_.min_exponents());
    LaurentPoly g = polynomial_gcd(num_poly, den_);
    if (!g.is_constant()) {
      LaurentPoly a, b;
      if (!exact_divide(num_, g, a) || !exact_divide(den_, g, b))
        throw MathError("QtScalar: gcd does not divide");
      num_ = std::move(a);
      den_ = std::move(b);
      Monomial s = Monomial{} - den_.min_exponents();
      den_ = den_.shifted(s);
      num_ = num_.shifted(s);
    }
  }
  BigRational lead = den_.leading_term().coeff;
  if (lead != 1) {
    BigRational inv = BigRational(1) / lead;
    num_ *= inv;
    den_ *= inv;
  }
  int g = std::gcd(m_, std::gcd(num_.v_exponent_gcd(), den_.v_exponent_gcd()));
  if (g > 1) {
    num_ = num_.divide_v_exponents(g);
    den_ = den_.divide_v_exponents(g);
    m_ /= g;
  }
}

QtScalar QtScalar::lifted(int m) const {
  if (m == m_) return *this;
  QtScalar r = *this;
  int factor = m / m_;
  r.num_ = num_.scale_v(factor);
  r.den_ = den_.scale_v(factor);
  r.m_ = m;
  return r;
}

namespace {

int common_m(int a, int b) { return std::lcm(a, b); }

}  // namespace

QtScalar QtScalar::operator-() const {
  QtScalar r = *this;
  r.num_ = -r.num_;
  return r;
}

QtScalar& QtScalar::operator+=(const QtScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int m = common_m(m_, o.m_);
  QtScalar a = lifted(m);
  QtScalar b = o.lifted(m);
  if (a.den_ == b.den_) {
    num_ = a.num_ + b.num_;
    den_ = std::move(a.den_);
  } else {
    num_ = a.num_ * b.den_ + b.num_ * a.den_;
    den_ = a.den_ * b.den_;
  }
  m_ = m;
  normalize();
  return *this;
}

QtScalar& QtScalar::operator-=(const QtScalar& o) { return *this += -o; }

QtScalar& QtScalar::operator*=(const QtScalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = QtScalar();
  int m = common_m(m_, o.m_);
  QtScalar a = lifted(m);
  QtScalar b = o.lifted(m);
  num_ = a.num_ * b.num_;
  den_ = a.den_ * b.den_;
  m_ = m;
  normalize();
  return *this;
}

QtScalar QtScalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero QtScalar");
  return QtScalar(den_, num_, m_);
}

QtScalar& QtScalar::operator/=(const QtScalar& o) { return *this *= o.inverse(); }

bool operator==(const QtScalar& a, const QtScalar& b) {
  return a.m_ == b.m_ && a.num_ == b.num_ && a.den_ == b.den_;
}

QtScalar QtScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QtScalar result(1);
  QtScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string QtScalar::to_string() const {
  if (den_ == LaurentPoly(1)) return num_.to_string(m_);
  std::string n = num_.to_string(m_);
  if (num_.size() > 1) n = "(" + n + ")";
  return n + "/(" + den_.to_string(m_) + ")";
}

QtScalar iota(const QtScalar& a) { return QtScalar(a.num().inverted(), a.den().inverted(), a.m()); }

QtScalar specialize(const QtScalar& a, Specialization s) {
  if (s.k < 0) throw InvalidArgument("specialization k must be non-negative");
  int m = a.m();
  int factor = (s.k * m) % 2 == 0 ? 1 : 2;
  int m2 = m * factor;
  LaurentPoly num = a.num().scale_v(factor);
  LaurentPoly den = a.den().scale_v(factor);
  int power = -s.k * m2 / 2;
  num = num.substitute_t(power);
  den = den.substitute_t(power);
  if (den.is_zero())
    throw MathError("specialization t = q^(-" + std::to_string(s.k) +
                    "/2) makes the denominator vanish");
  return QtScalar(std::move(num), std::move(den), m2);
}

}  // namespace gmult::coeff
