#include "gmult/rootsys/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "gmult/errors.hpp"

namespace gmult::rootsys {

using coeff::BigRational;

CartanType CartanType::parse(const std::string& label) {
  if (label.size() < 2) throw InvalidArgument("unknown root system type '" + label + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(label[0])));
  std::string digits = label.substr(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 2)
    throw InvalidArgument("unknown root system type '" + label + "'");
  int r = std::stoi(digits);
  bool ok = false;
  switch (letter) {
    case 'A': ok = r >= 1 && r <= kMaxRank; break;
    case 'B': ok = r >= 2 && r <= kMaxRank; break;
    case 'C': ok = r >= 2 && r <= kMaxRank; break;
    case 'D': ok = r >= 4 && r <= kMaxRank; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default: break;
  }
  if (!ok) throw InvalidArgument("unknown root system type '" + label + "'");
  return {letter, r};
}

std::size_t classification_root_count(const CartanType& t) {
  auto r = static_cast<std::size_t>(t.rank);
  switch (t.letter) {
    case 'A': return r * (r + 1);
    case 'B':
    case 'C': return 2 * r * r;
    case 'D': return 2 * r * (r - 1);
    case 'E': return r == 6 ? 72 : r == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    default: return 0;
  }
}

std::uint64_t classification_weyl_order(const CartanType& t) {
  std::uint64_t fact = 1;
  for (int i = 2; i <= t.rank; ++i) fact *= static_cast<std::uint64_t>(i);
  switch (t.letter) {
    case 'A': return fact * static_cast<std::uint64_t>(t.rank + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << t.rank) * fact;
    case 'D': return (std::uint64_t{1} << (t.rank - 1)) * fact;
    case 'E': return t.rank == 6 ? 51840 : t.rank == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    default: return 0;
  }
}

RootSystem::RootSystem(CartanType type) : type_(type) {
  build_cartan();
  build_inverse();
  build_roots();
  build_exponents();
  weyl_order_ = classification_weyl_order(type_);
}

std::shared_ptr<const RootSystem> RootSystem::build(const std::string& label) {
  return std::make_shared<const RootSystem>(CartanType::parse(label));
}

void RootSystem::build_cartan() {
  const int r = type_.rank;
  gram_.assign(r, std::vector<int>(r, 0));
  auto edge = [&](int i, int j, int v) {  // 1-based Bourbaki labels
    gram_[i - 1][j - 1] = v;
    gram_[j - 1][i - 1] = v;
  };
  for (int i = 0; i < r; ++i) gram_[i][i] = 2;
  switch (type_.letter) {
    case 'A':
      for (int i = 1; i < r; ++i) edge(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i < r - 1; ++i) gram_[i][i] = 4;
      for (int i = 1; i < r; ++i) edge(i, i + 1, -2);
      break;
    case 'C':
      gram_[r - 1][r - 1] = 4;
      for (int i = 1; i < r - 1; ++i) edge(i, i + 1, -1);
      edge(r - 1, r, -2);
      break;
    case 'D':
      for (int i = 1; i < r - 1; ++i) edge(i, i + 1, -1);
      edge(r - 2, r, -1);
      break;
    case 'E': {
      const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
      for (const auto& e : edges)
        if (e[0] <= r && e[1] <= r) edge(e[0], e[1], -1);
      break;
    }
    case 'F':
      gram_[0][0] = gram_[1][1] = 4;
      edge(1, 2, -2);
      edge(2, 3, -2);
      edge(3, 4, -1);
      break;
    case 'G':
      gram_[1][1] = 6;
      edge(1, 2, -3);
      break;
    default:
      throw InvalidArgument("unsupported type");
  }
  cartan_.assign(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) cartan_[i][j] = 2 * gram_[i][j] / gram_[i][i];
  int lo = gram_[0][0], hi = gram_[0][0];
  for (int i = 0; i < r; ++i) {
    lo = std::min(lo, gram_[i][i]);
    hi = std::max(hi, gram_[i][i]);
  }
  if (hi != lo) lambda_ = hi / lo;
  simple_weights_.clear();
  for (int i = 0; i < r; ++i) {
    Weight w(r);
    for (int k = 0; k < r; ++k) w[k] = cartan_[k][i];
    simple_weights_.push_back(w);
  }
}

void RootSystem::build_inverse() {
  const int r = type_.rank;
  std::vector<std::vector<BigRational>> a(r, std::vector<BigRational>(2 * r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) a[i][j] = cartan_[i][j];
    a[i][r + i] = 1;
  }
  for (int col = 0; col < r; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    BigRational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (int i = 0; i < r; ++i) {
      if (i == col || a[i][col] == 0) continue;
      BigRational f = a[i][col];
      for (int j = 0; j < 2 * r; ++j) a[i][j] -= f * a[col][j];
    }
  }
  long den = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) den = std::lcm(den, a[i][r + j].get_den().get_si());
  cinv_den_ = static_cast<int>(den);
  m_ = cinv_den_;
  cinv_num_.assign(r, std::vector<std::int64_t>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      BigRational x = a[i][r + j] * den;
      cinv_num_[i][j] = x.get_num().get_si();
    }
  // (ω_i, ω_k) = (C^{-1})[k][i] · B_kk / 2
  inner_scale_ = cinv_den_;
  omega_gram_.assign(r, std::vector<std::int64_t>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) omega_gram_[i][k] = cinv_num_[k][i] * (gram_[k][k] / 2);
}

void RootSystem::build_roots() {
  const int r = type_.rank;
  std::unordered_set<RootVector, LatticeHash> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < r; ++i) {
    RootVector a = RootVector::unit(r, i);
    seen.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    RootVector a = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      RootVector b = reflect(i, a);
      if (seen.insert(b).second) queue.push_back(b);
    }
  }
  roots_.assign(seen.begin(), seen.end());
  auto by_height = [](const RootVector& x, const RootVector& y) {
    int hx = x.sum(), hy = y.sum();
    if (hx != hy) return hx < hy;
    return x < y;
  };
  std::sort(roots_.begin(), roots_.end(), by_height);
  positive_.clear();
  for (const auto& a : roots_) {
    bool pos = true;
    for (int i = 0; i < r; ++i) pos = pos && a[i] >= 0;
    if (pos) positive_.push_back(a);
  }
  root_weights_.clear();
  for (const auto& a : roots_) root_weights_.push_back(to_weight(a));
  positive_weights_.clear();
  for (const auto& a : positive_) positive_weights_.push_back(to_weight(a));
  theta_ = positive_.back();
  theta_s_.reset();
  if (!simply_laced()) {
    for (const auto& a : positive_)
      if (is_short(a)) theta_s_ = a;  // positives ascend in height
  }
}

void RootSystem::build_exponents() {
  const int r = type_.rank;
  auto dual = [](const std::vector<int>& parts) {
    std::vector<int> d;
    int top = parts.empty() ? 0 : *std::max_element(parts.begin(), parts.end());
    for (int j = 1; j <= top; ++j) {
      int c = 0;
      for (int p : parts) c += p >= j ? 1 : 0;
      d.push_back(c);
    }
    std::sort(d.begin(), d.end());
    return d;
  };
  int top = theta_.sum();
  exponents_.m_partition.assign(top, 0);
  for (const auto& a : positive_) ++exponents_.m_partition[a.sum() - 1];
  exponents_.d = dual(exponents_.m_partition);
  exponents_.r_l = exponents_.r_s = 0;
  for (int i = 0; i < r; ++i) (simple_is_long(i) ? exponents_.r_l : exponents_.r_s)++;
  exponents_.m_s_partition.clear();
  exponents_.d_s.clear();
  if (theta_s_) {
    exponents_.m_s_partition.assign(theta_s_->sum(), 0);
    for (const auto& a : positive_)
      if (is_short(a)) ++exponents_.m_s_partition[a.sum() - 1];
    exponents_.d_s = dual(exponents_.m_s_partition);
  }
}

bool RootSystem::simple_is_long(int i) const {
  if (simply_laced()) return true;
  return gram_[i][i] == 2 * *lambda_;
}

bool RootSystem::is_root(const RootVector& v) const { return root_index(v).has_value(); }

std::optional<std::size_t> RootSystem::root_index(const RootVector& v) const {
  auto by_height = [](const RootVector& x, const RootVector& y) {
    int hx = x.sum(), hy = y.sum();
    if (hx != hy) return hx < hy;
    return x < y;
  };
  auto it = std::lower_bound(roots_.begin(), roots_.end(), v, by_height);
  if (it == roots_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - roots_.begin());
}

int RootSystem::inner(const RootVector& a, const RootVector& b) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += a[i] * b[j] * gram_[i][j];
  }
  return s;
}

bool RootSystem::is_long(const RootVector& a) const {
  if (simply_laced()) return true;
  return norm2(a) == 2 * *lambda_;
}

bool RootSystem::is_short(const RootVector& a) const {
  if (simply_laced()) return false;
  return norm2(a) == 2;
}

Heights RootSystem::heights(const RootVector& a) const {
  Heights h;
  for (int i = 0; i < rank(); ++i) {
    h.ht += a[i];
    if (simple_is_long(i))
      h.ht_l += a[i];
    else
      h.ht_s += a[i];
  }
  return h;
}

Weight RootSystem::to_weight(const RootVector& a) const {
  Weight w(rank());
  for (int i = 0; i < rank(); ++i) {
    int s = 0;
    for (int j = 0; j < rank(); ++j) s += a[j] * cartan_[i][j];
    w[i] = s;
  }
  return w;
}

std::vector<std::int64_t> RootSystem::root_coords_scaled(const Weight& mu) const {
  std::vector<std::int64_t> k(rank(), 0);
  for (int j = 0; j < rank(); ++j)
    for (int i = 0; i < rank(); ++i) k[j] += cinv_num_[j][i] * mu[i];
  return k;
}

std::optional<RootVector> RootSystem::to_root(const Weight& mu) const {
  auto k = root_coords_scaled(mu);
  RootVector a(rank());
  for (int j = 0; j < rank(); ++j) {
    if (k[j] % cinv_den_ != 0) return std::nullopt;
    a[j] = static_cast<int>(k[j] / cinv_den_);
  }
  return a;
}

CorootVector RootSystem::coroot(const RootVector& a) const {
  int n = norm2(a);
  CorootVector l(rank());
  for (int j = 0; j < rank(); ++j) l[j] = a[j] * gram_[j][j] / n;
  return l;
}

int RootSystem::pair(const Weight& mu, const RootVector& beta) const {
  int n = norm2(beta);
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += mu[j] * beta[j] * gram_[j][j];
  return s / n;
}

int RootSystem::pair(const CorootVector& lambda, const Weight& mu) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += lambda[j] * mu[j];
  return s;
}

int RootSystem::pair(const CorootVector& lambda, const RootVector& beta) const {
  return pair(lambda, to_weight(beta));
}

BigRational RootSystem::inner(const Weight& a, const Weight& b) const {
  return BigRational(inner_scaled(a, b)) / inner_scale_;
}

std::int64_t RootSystem::inner_scaled(const Weight& a, const Weight& b) const {
  std::int64_t s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int k = 0; k < rank(); ++k) s += std::int64_t{a[i]} * b[k] * omega_gram_[i][k];
  }
  return s;
}

Weight RootSystem::rho() const {
  Weight w(rank());
  for (int i = 0; i < rank(); ++i) w[i] = 1;
  return w;
}

Weight RootSystem::reflect(int i, const Weight& mu) const {
  Weight w = mu;
  int c = mu[i];
  if (c == 0) return w;
  for (int k = 0; k < rank(); ++k) w[k] -= c * cartan_[k][i];
  return w;
}

RootVector RootSystem::reflect(int i, const RootVector& a) const {
  RootVector b = a;
  int c = 0;
  for (int j = 0; j < rank(); ++j) c += a[j] * cartan_[i][j];
  b[i] -= c;
  return b;
}

CorootVector RootSystem::reflect(int i, const CorootVector& l) const {
  // (α_i, λ) = Σ_j l_j C[j][i]
  CorootVector out = l;
  int c = 0;
  for (int j = 0; j < rank(); ++j) c += l[j] * cartan_[j][i];
  out[i] -= c;
  return out;
}

Weight RootSystem::reflect(const RootVector& beta, const Weight& mu) const {
  int c = pair(mu, beta);
  if (c == 0) return mu;
  return mu - c * to_weight(beta);
}

RootVector RootSystem::reflect(const RootVector& beta, const RootVector& a) const {
  int c = pair(to_weight(a), beta);
  return a - c * beta;
}

CorootVector RootSystem::reflect(const RootVector& beta, const CorootVector& l) const {
  int c = pair(l, beta);
  return l - c * coroot(beta);
}

bool RootSystem::is_dominant(const Weight& mu) const {
  for (int i = 0; i < rank(); ++i)
    if (mu[i] < 0) return false;
  return true;
}

Weight RootSystem::dominant_representative(const Weight& mu) const {
  Weight w = mu;
  for (;;) {
    int i = 0;
    while (i < rank() && w[i] >= 0) ++i;
    if (i == rank()) return w;
    w = reflect(i, w);
  }
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& nu) const {
  auto k = root_coords_scaled(nu - mu);
  for (auto x : k)
    if (x < 0 || x % cinv_den_ != 0) return false;
  return true;
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& mu, std::size_t limit) const {
  std::unordered_set<Weight, LatticeHash> seen{mu};
  std::vector<Weight> frontier{mu};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& w : frontier)
      for (int i = 0; i < rank(); ++i) {
        if (w[i] == 0) continue;
        Weight v = reflect(i, w);
        if (seen.insert(v).second) {
          if (seen.size() > limit) throw BudgetExceeded("Weyl orbit larger than budget");
          next.push_back(v);
        }
      }
    frontier = std::move(next);
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gmult::rootsys
