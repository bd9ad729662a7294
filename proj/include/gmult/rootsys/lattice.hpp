#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace gmult::rootsys {

inline constexpr int kMaxRank = 8;

// Integer vector of length `rank` (≤ kMaxRank) in a fixed basis. The tag
// keeps the three bases apart at compile time.
template <class Tag>
struct LatticeVector {
  std::array<int, kMaxRank> c{};
  int rank = 0;

  LatticeVector() = default;
  explicit LatticeVector(int r) : rank(r) {}
  LatticeVector(std::initializer_list<int> xs) : rank(static_cast<int>(xs.size())) {
    int i = 0;
    for (int x : xs) c[i++] = x;
  }
  static LatticeVector from(const std::vector<int>& xs) {
    LatticeVector v(static_cast<int>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) v.c[i] = xs[i];
    return v;
  }
  static LatticeVector unit(int r, int i) {
    LatticeVector v(r);
    v.c[i] = 1;
    return v;
  }

  int& operator[](int i) { return c[i]; }
  int operator[](int i) const { return c[i]; }

  bool is_zero() const {
    for (int i = 0; i < rank; ++i)
      if (c[i] != 0) return false;
    return true;
  }
  int sum() const {
    int s = 0;
    for (int i = 0; i < rank; ++i) s += c[i];
    return s;
  }
  std::vector<int> to_vector() const { return std::vector<int>(c.begin(), c.begin() + rank); }

  LatticeVector& operator+=(const LatticeVector& o) {
    for (int i = 0; i < rank; ++i) c[i] += o.c[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    for (int i = 0; i < rank; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(int k, LatticeVector a) {
    for (int i = 0; i < a.rank; ++i) a.c[i] *= k;
    return a;
  }
  LatticeVector operator-() const { return -1 * *this; }

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (int i = 0; i < rank; ++i) {
      if (i) s += ",";
      s += std::to_string(c[i]);
    }
    return s + "]";
  }
};

struct WeightTag {};
struct RootTag {};
struct CorootTag {};

// Fundamental-weight coordinates: μ = Σ μ_i ω_i, so μ_i = (μ, α_i∨).
using Weight = LatticeVector<WeightTag>;
// Simple-root coordinates.
using RootVector = LatticeVector<RootTag>;
// Simple-coroot coordinates.
using CorootVector = LatticeVector<CorootTag>;

struct LatticeHash {
  template <class Tag>
  std::size_t operator()(const LatticeVector<Tag>& v) const noexcept {
    std::size_t h = static_cast<std::size_t>(v.rank) * 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < v.rank; ++i)
      h = (h ^ static_cast<std::size_t>(static_cast<unsigned>(v.c[i]))) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace gmult::rootsys
