#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gmult::coeff {

// Dense Laurent polynomial in q with 64-bit integer coefficients.
// Overflow throws BudgetExceeded instead of wrapping.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::int64_t c);  // NOLINT(google-explicit-constructor)
  static IntPoly monomial(int degree, std::int64_t c = 1);
  static IntPoly from_map(const std::map<int, std::int64_t>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t operator[](int degree) const;
  std::map<int, std::int64_t> to_map() const;

  bool has_negative_coefficient() const;
  bool has_negative_degree() const { return !is_zero() && low_ < 0; }
  std::int64_t eval_at_one() const;
  IntPoly negate_q() const;  // q -> -q
  IntPoly shifted(int by) const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
  // Exact quotient; throws MathError when d does not divide *this.
  IntPoly divide_exact(const IntPoly& d) const;
  // this += c * q^shift * o
  void add_scaled(const IntPoly& o, std::int64_t c, int shift);

  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  // Ascending powers of q, e.g. "q + q^2 + 2*q^5".
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace gmult::coeff
