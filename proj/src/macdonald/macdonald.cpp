#include "gmult/macdonald/macdonald.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <unordered_map>

#include "gmult/errors.hpp"
#include "gmult/scalar/scalar.hpp"

namespace gmult::macdonald {

using coeff::BigRational;

std::int64_t scaled_height(const RootSystem& rs, const Weight& mu) {
  std::int64_t h = 0;
  for (auto x : rs.root_coords_scaled(mu)) h += x;
  return h;
}

namespace {

struct HeightLess {
  const RootSystem* rs;
  bool operator()(const Weight& a, const Weight& b) const {
    auto ha = scaled_height(*rs, a), hb = scaled_height(*rs, b);
    if (ha != hb) return ha < hb;
    return a < b;
  }
};

}  // namespace

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw InvalidArgument("weight " + lambda.to_string() + " is not dominant");
  std::set<Weight> seen{lambda};
  std::vector<Weight> stack{lambda};
  while (!stack.empty()) {
    Weight mu = stack.back();
    stack.pop_back();
    for (const auto& alpha : rs.positive_root_weights()) {
      Weight nu = mu - alpha;
      if (rs.is_dominant(nu) && seen.insert(nu).second) stack.push_back(nu);
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), HeightLess{&rs});
  return out;
}

std::vector<Weight> dominant_weights_up_to_height(const RootSystem& rs, int h) {
  const int r = rs.rank();
  const std::int64_t den = rs.root_coord_denominator();
  std::vector<std::int64_t> step(r);
  for (int i = 0; i < r; ++i) {
    Weight w = rs.zero_weight();
    w[i] = 1;
    step[i] = scaled_height(rs, w);
  }
  const std::int64_t cap = static_cast<std::int64_t>(h) * den;
  std::vector<Weight> out;
  Weight cur = rs.zero_weight();
  auto rec = [&](auto&& self, int i, std::int64_t used) -> void {
    if (i == r) {
      out.push_back(cur);
      return;
    }
    for (int c = 0; used + c * step[i] <= cap; ++c) {
      cur[i] = c;
      self(self, i + 1, used + c * step[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), HeightLess{&rs});
  return out;
}

std::vector<Weight> dominant_weights_below_box(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw InvalidArgument("weight " + lambda.to_string() + " is not dominant");
  const int r = rs.rank();
  const std::int64_t den = rs.root_coord_denominator();
  auto scaled = rs.root_coords_scaled(lambda);
  std::vector<int> bound(r);
  double cells = 1;
  for (int i = 0; i < r; ++i) {
    bound[i] = static_cast<int>(scaled[i] / den);
    cells *= bound[i] + 1;
  }
  if (cells > 5e7) throw BudgetExceeded("dominant weight search box too large");
  std::vector<Weight> out;
  std::vector<int> k(r, 0);
  for (;;) {
    Weight mu = lambda;
    for (int i = 0; i < r; ++i)
      if (k[i]) mu -= k[i] * rs.simple_root_weight(i);
    if (rs.is_dominant(mu)) out.push_back(mu);
    int i = 0;
    while (i < r && k[i] == bound[i]) k[i++] = 0;
    if (i == r) break;
    ++k[i];
  }
  std::sort(out.begin(), out.end(), HeightLess{&rs});
  return out;
}

MacdonaldPoly macdonald_poly(const RootSystem& rs, const Weight& lambda, int k) {
  auto basis = dominant_weights_below(rs, lambda);
  const std::size_t n = basis.size();
  std::vector<AlgebraElement> orbit;
  orbit.reserve(n);
  for (const auto& mu : basis) orbit.push_back(groupalg::orbit_sum(rs, mu));
  std::vector<std::vector<QtScalar>> gram(n, std::vector<QtScalar>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      gram[i][j] = gram[j][i] = scalar::macdonald_product(rs, orbit[i], orbit[j], k);

  // coeffs[i] expresses P_{basis[i]} in the orbit sums; triangular.
  std::vector<std::vector<QtScalar>> coeffs(n, std::vector<QtScalar>(n));
  std::vector<QtScalar> norms(n);
  for (std::size_t i = 0; i < n; ++i) {
    coeffs[i][i] = QtScalar(1);
    for (std::size_t j = 0; j < i; ++j) {
      QtScalar proj;
      for (std::size_t l = 0; l <= j; ++l)
        if (!coeffs[j][l].is_zero()) proj += coeffs[j][l] * gram[i][l];
      if (proj.is_zero()) continue;
      QtScalar f = proj / norms[j];
      for (std::size_t l = 0; l <= j; ++l)
        if (!coeffs[j][l].is_zero()) coeffs[i][l] -= f * coeffs[j][l];
    }
    QtScalar nrm;
    for (std::size_t a = 0; a <= i; ++a) {
      if (coeffs[i][a].is_zero()) continue;
      QtScalar row;
      for (std::size_t b = 0; b <= i; ++b)
        if (!coeffs[i][b].is_zero()) row += gram[a][b] * coeffs[i][b];
      nrm += coeffs[i][a] * row;
    }
    if (nrm.is_zero())
      throw MathError("Gram-Schmidt hit an isotropic vector at " + basis[i].to_string());
    norms[i] = nrm;
  }
  MacdonaldPoly p;
  p.lambda = lambda;
  p.k = k;
  for (std::size_t l = 0; l < n; ++l) {
    const QtScalar& c = coeffs[n - 1][l];
    if (c.is_zero()) continue;
    p.orbit_coefficients[basis[l]] = c;
    p.expansion += orbit[l] * c;
  }
  return p;
}

bool verify_orthogonality(const RootSystem& rs, const MacdonaldPoly& p) {
  for (const auto& mu : dominant_weights_below(rs, p.lambda)) {
    if (mu == p.lambda) continue;
    if (!scalar::macdonald_product(rs, p.expansion, groupalg::orbit_sum(rs, mu), p.k).is_zero())
      return false;
  }
  return true;
}

std::uint64_t max_weyl_order() {
  if (const char* env = std::getenv("GMULT_MAX_WEYL_ORDER")) {
    long long v = std::atoll(env);
    if (v > 0) return static_cast<std::uint64_t>(v);
  }
  return 2'000'000;
}

IntCharacter weyl_character_int(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda))
    throw InvalidArgument("weight " + lambda.to_string() + " is not dominant");
  if (rs.weyl_order() > max_weyl_order())
    throw BudgetExceeded("|W| = " + std::to_string(rs.weyl_order()) + " exceeds the budget");
  const Weight rho = rs.rho();
  using Key = std::pair<std::int64_t, Weight>;
  std::map<Key, std::int64_t> F;
  {
    std::unordered_map<Weight, int, rootsys::LatticeHash> sign{{lambda + rho, 1}};
    std::vector<Weight> frontier{lambda + rho};
    while (!frontier.empty()) {
      std::vector<Weight> next;
      for (const auto& w : frontier)
        for (int i = 0; i < rs.rank(); ++i) {
          Weight v = rs.reflect(i, w);
          if (sign.emplace(v, -sign[w]).second) next.push_back(v);
        }
      frontier = std::move(next);
    }
    for (const auto& [w, s] : sign) {
      Weight mu = w - rho;
      F[{scaled_height(rs, mu), mu}] = s;
    }
  }
  const std::int64_t den = rs.root_coord_denominator();
  for (std::size_t a = 0; a < rs.positive_roots().size(); ++a) {
    const Weight alpha = rs.positive_root_weights()[a];
    const std::int64_t ha = rs.positive_roots()[a].sum() * den;
    const std::int64_t floor = F.begin()->first.first + ha;
    std::map<Key, std::int64_t> Q;
    while (!F.empty()) {
      auto top = std::prev(F.end());
      auto [key, c] = *top;
      if (key.first < floor) throw MathError("alternant division left a nonzero remainder");
      F.erase(top);
      Q[key] += c;
      Weight low = key.second - alpha;
      Key lk{key.first - ha, low};
      auto it = F.find(lk);
      if (it == F.end()) {
        F.emplace(lk, c);
      } else if ((it->second += c) == 0) {
        F.erase(it);
      }
    }
    F = std::move(Q);
  }
  IntCharacter out;
  for (const auto& [key, c] : F)
    if (c != 0) out[key.second] = c;
  return out;
}

AlgebraElement weyl_character(const RootSystem& rs, const Weight& lambda) {
  AlgebraElement f;
  for (const auto& [mu, c] : weyl_character_int(rs, lambda)) f.add_term(mu, QtScalar(c));
  return f;
}

std::map<Weight, std::int64_t> dominant_multiplicities(const RootSystem& rs, const Weight& lambda) {
  auto dom = dominant_weights_below(rs, lambda);
  std::reverse(dom.begin(), dom.end());  // λ first
  std::unordered_map<Weight, std::int64_t, rootsys::LatticeHash> mult;
  for (const auto& mu : dom) mult[mu] = 0;
  std::unordered_map<Weight, Weight, rootsys::LatticeHash> rep_cache;
  auto rep = [&](const Weight& w) -> const Weight& {
    auto it = rep_cache.find(w);
    if (it == rep_cache.end()) it = rep_cache.emplace(w, rs.dominant_representative(w)).first;
    return it->second;
  };
  const Weight rho = rs.rho();
  const std::int64_t top = rs.inner_scaled(lambda + rho, lambda + rho);
  const auto& pos = rs.positive_root_weights();
  mult[lambda] = 1;
  for (std::size_t idx = 1; idx < dom.size(); ++idx) {
    const Weight& mu = dom[idx];
    std::int64_t num = 0;
    for (const auto& alpha : pos) {
      Weight nu = mu;
      for (;;) {
        nu += alpha;
        auto it = mult.find(rep(nu));
        if (it == mult.end()) break;
        num = coeff::checked_add(num, coeff::checked_mul(2 * it->second, rs.inner_scaled(nu, alpha)));
      }
    }
    std::int64_t den = top - rs.inner_scaled(mu + rho, mu + rho);
    if (den <= 0 || num % den != 0) throw MathError("Freudenthal recursion is not integral");
    mult[mu] = num / den;
  }
  std::map<Weight, std::int64_t> out;
  for (const auto& mu : dom) out[mu] = mult[mu];
  return out;
}

BigRational weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  BigRational d = 1;
  const Weight rho = rs.rho();
  for (const auto& a : rs.positive_roots()) d *= BigRational(rs.pair(lambda + rho, a), rs.pair(rho, a));
  d.canonicalize();
  return d;
}

}  // namespace gmult::macdonald
