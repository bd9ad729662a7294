#include "gmult/scalar/scalar.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <tuple>

#include "gmult/errors.hpp"
#include "gmult/hecke/hecke.hpp"

namespace gmult::scalar {

using coeff::Specialization;
using rootsys::Weight;

int max_k() {
  if (const char* env = std::getenv("GMULT_MAX_K")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 3;
}

std::size_t max_kernel_terms() {
  if (const char* env = std::getenv("GMULT_MAX_KERNEL_TERMS")) {
    long long v = std::atoll(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 1'000'000;
}

PolyCharacter build_kernel(const RootSystem& rs, int k, KernelKind kind) {
  if (k < 0) throw InvalidArgument("kernel: k must be non-negative");
  if (k > max_k())
    throw BudgetExceeded("kernel: k = " + std::to_string(k) + " exceeds the cap " +
                         std::to_string(max_k()));
  PolyCharacter p(rs.zero_weight());
  const auto& roots = rs.roots();
  const auto& weights = rs.root_weights();
  for (std::size_t j = 0; j < roots.size(); ++j) {
    bool positive = roots[j].sum() > 0;
    for (int i = 0; i < k; ++i) {
      if (kind == KernelKind::Macdonald)
        p.multiply_binomial(weights[j], i, -1);
      else
        p.multiply_binomial(-weights[j], i + (positive ? 0 : 1), -1);
      if (p.size() > max_kernel_terms())
        throw BudgetExceeded("kernel for " + rs.label() + " at k = " + std::to_string(k) +
                             " exceeds " + std::to_string(max_kernel_terms()) + " terms");
    }
  }
  return p;
}

std::shared_ptr<const PolyCharacter> kernel(const RootSystem& rs, int k, KernelKind kind) {
  using Key = std::tuple<std::string, int, int>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const PolyCharacter>> cache;
  Key key{rs.label(), k, static_cast<int>(kind)};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const PolyCharacter>(build_kernel(rs, k, kind));
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, built);
  return it->second;
}

namespace {

// Σ_{μ,ν} f[μ] g'[ν] K[ν − μ]
QtScalar pair_with_kernel(const AlgebraElement& f, const AlgebraElement& g, const PolyCharacter& K) {
  QtScalar sum;
  std::map<Weight, QtScalar> cache;
  for (const auto& [mu, a] : f.terms())
    for (const auto& [nu, b] : g.terms()) {
      Weight d = nu - mu;
      auto it = cache.find(d);
      if (it == cache.end()) it = cache.emplace(d, groupalg::to_qt(K.coeff(d))).first;
      if (it->second.is_zero()) continue;
      sum += a * b * it->second;
    }
  return sum;
}

}  // namespace

QtScalar macdonald_product(const RootSystem& rs, const AlgebraElement& f, const AlgebraElement& g,
                           int k, bool normalized) {
  Specialization s{k};
  auto K = kernel(rs, k, KernelKind::Macdonald);
  QtScalar v = pair_with_kernel(groupalg::specialize(f, s), groupalg::specialize(g, s), *K);
  if (normalized) v /= QtScalar(static_cast<long>(rs.weyl_order()));
  return v;
}

QtScalar cherednik_product(const RootSystem& rs, const AlgebraElement& f, const AlgebraElement& g,
                           int k) {
  if (k < 1) throw InvalidArgument("Cherednik product needs k >= 1");
  Specialization s{k};
  auto K = kernel(rs, k, KernelKind::Cherednik);
  return pair_with_kernel(groupalg::specialize(f, s),
                          groupalg::specialize(groupalg::iota_coeffs(g), s), *K);
}

QtScalar cherednik_ratio(const RootSystem& rs, const AlgebraElement& f, int k) {
  AlgebraElement one = AlgebraElement::exp(rs.zero_weight());
  QtScalar den = cherednik_product(rs, one, one, k);
  if (den.is_zero()) throw DivisionByZero("(1,1) vanishes");
  return cherednik_product(rs, f, one, k) / den;
}

namespace {

QtScalar X_factor(const RootSystem& rs) {
  int dr = rs.exponents().d.back();
  QtScalar t2 = QtScalar::t_pow(2);
  return (t2 - QtScalar(1)) / (QtScalar::qt(1, -2 * dr) - QtScalar(1));
}

}  // namespace

QtScalar theorem2_value(const RootSystem& rs, int height) {
  return QtScalar::t_pow(-2 * height) * X_factor(rs);
}

QtScalar corollary_value(const RootSystem& rs, int height) {
  int dr = rs.exponents().d.back();
  return QtScalar::qt(1, 2 * height - 2 * (dr + 1)) * X_factor(rs);
}

Report verify_theorem2(const RootSystem& rs, int k) {
  Report r{"theorem2 k=" + std::to_string(k)};
  for (const auto& a : rs.positive_roots()) {
    ++r.checked;
    QtScalar got = cherednik_ratio(rs, AlgebraElement::exp(rs.to_weight(a)), k);
    QtScalar want = coeff::specialize(theorem2_value(rs, a.sum()), {k});
    if (!(got == want)) {
      r.passed = false;
      r.detail = "e^" + a.to_string() + ": " + got.to_string() + " != " + want.to_string();
      return r;
    }
  }
  r.detail = std::to_string(r.checked) + " positive roots";
  return r;
}

Report verify_corollary(const RootSystem& rs, int k) {
  Report r{"corollary k=" + std::to_string(k)};
  for (const auto& a : rs.positive_roots()) {
    ++r.checked;
    QtScalar got = cherednik_ratio(rs, AlgebraElement::exp(rs.to_weight(-a)), k);
    QtScalar want = coeff::specialize(corollary_value(rs, a.sum()), {k});
    if (!(got == want)) {
      r.passed = false;
      r.detail = "e^-" + a.to_string() + ": " + got.to_string() + " != " + want.to_string();
      return r;
    }
  }
  r.detail = std::to_string(r.checked) + " negative roots";
  return r;
}

Report verify_convexity_theorem(const RootSystem& rs, int k) {
  Report r{"convexity k=" + std::to_string(k)};
  auto check_set = [&](const std::vector<rootsys::RootVector>& A, const std::string& name) {
    if (A.empty() || !r.passed) return;
    const auto& top = A.back();  // maximal element: A is sorted by height
    QtScalar X = cherednik_ratio(rs, AlgebraElement::exp(rs.to_weight(top)), k) *
                 coeff::specialize(QtScalar::t_pow(2 * top.sum()), {k});
    for (const auto& a : A) {
      ++r.checked;
      QtScalar got = cherednik_ratio(rs, AlgebraElement::exp(rs.to_weight(a)), k);
      QtScalar want = coeff::specialize(QtScalar::t_pow(-2 * a.sum()), {k}) * X;
      if (!(got == want)) {
        r.passed = false;
        r.detail = name + " fails at " + a.to_string();
        return;
      }
    }
  };
  std::vector<rootsys::RootVector> shorts;
  for (const auto& a : rs.positive_roots())
    if (rs.is_short(a)) shorts.push_back(a);
  check_set(shorts, "R+_s");
  check_set(rs.positive_roots(), "R+");
  if (r.passed) r.detail = std::to_string(r.checked) + " roots";
  return r;
}

std::vector<Weight> sample_weights(const RootSystem& rs, int bound, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-bound, bound);
  std::vector<Weight> out;
  const std::int64_t den = rs.root_coord_denominator();
  int guard = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++guard > 1000 * (count + 1)) throw MathError("weight sampler made no progress");
    Weight w(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) w[i] = coord(rng);
    std::int64_t ht = 0;
    for (auto x : rs.root_coords_scaled(w)) ht += x;
    if (ht > bound * den || ht < -bound * den) continue;
    out.push_back(w);
  }
  return out;
}

Report verify_unitarity(const RootSystem& rs, int k, int sample_bound, int pairs,
                        std::uint64_t seed) {
  Report r{"unitarity k=" + std::to_string(k)};
  auto fs = sample_weights(rs, sample_bound, pairs, seed);
  auto gs = sample_weights(rs, sample_bound, pairs, seed ^ 0x5bd1e995ULL);
  for (int n = 0; n < pairs; ++n) {
    AlgebraElement f = AlgebraElement::exp(fs[n]);
    AlgebraElement g = AlgebraElement::exp(gs[n]);
    for (int i = 0; i <= rs.rank(); ++i) {
      ++r.checked;
      QtScalar lhs = cherednik_product(rs, hecke::apply_T(rs, i, f), g, k);
      QtScalar rhs = cherednik_product(rs, f, hecke::apply_T_inverse(rs, i, g), k);
      if (!(lhs == rhs)) {
        r.passed = false;
        r.detail = "i=" + std::to_string(i) + " f=e" + fs[n].to_string() + " g=e" + gs[n].to_string();
        return r;
      }
    }
  }
  r.detail = std::to_string(r.checked) + " (i, f, g) triples";
  return r;
}

Report verify_unitarity_identity(const RootSystem& rs, int k) {
  Report r{"unitarity identity k=" + std::to_string(k)};
  if (!rs.theta_s()) {
    r.skipped = true;
    r.detail = "simply laced: no short roots";
    return r;
  }
  Specialization s{k};
  QtScalar x = cherednik_ratio(rs, AlgebraElement::exp(rs.to_weight(*rs.theta_s())), k);
  QtScalar h = coeff::specialize(QtScalar::h(), s);
  QtScalar lhs, rhs;
  if (rs.type().letter == 'G') {
    lhs = coeff::specialize(QtScalar::qt(1, -4), s) * x - h * coeff::specialize(QtScalar::t_pow(1), s);
    rhs = coeff::specialize(QtScalar::t_pow(6), s) * x;
  } else {
    int L = rs.L(), S = rs.S();
    lhs = coeff::specialize(QtScalar::qt(1, -S), s) * x -
          h * coeff::specialize(QtScalar::t_pow(L - S + 2), s);
    rhs = coeff::specialize(QtScalar::t_pow(2 * L + S), s) * x;
  }
  r.checked = 1;
  // Same identity through the operators themselves.
  auto Y = hecke::build_Y_theta_dual(rs);
  auto Yinv = hecke::build_Y_minus_theta_dual(rs);
  AlgebraElement one = AlgebraElement::exp(rs.zero_weight());
  AlgebraElement es = AlgebraElement::exp(rs.to_weight(*rs.theta_s()));
  QtScalar a = cherednik_product(rs, Y.apply(rs, es), one, k);
  QtScalar b = cherednik_product(rs, es, Yinv.apply(rs, one), k);
  r.checked = 2;
  r.passed = lhs == rhs && a == b;
  r.detail = r.passed ? "both forms agree" : "mismatch: " + lhs.to_string() + " vs " + rhs.to_string();
  return r;
}

Report verify_cherednik_symmetry(const RootSystem& rs, int k, int sample_bound, int pairs,
                                 std::uint64_t seed) {
  Report r{"cherednik symmetry k=" + std::to_string(k)};
  AlgebraElement one = AlgebraElement::exp(rs.zero_weight());
  QtScalar norm = cherednik_product(rs, one, one, k);
  auto fs = sample_weights(rs, sample_bound, pairs, seed);
  auto gs = sample_weights(rs, sample_bound, pairs, seed + 17);
  const QtScalar t = QtScalar::t_pow(1);
  for (int n = 0; n < pairs; ++n) {
    // coefficients with t and q so that ι is visible
    AlgebraElement f = AlgebraElement::exp(fs[n], t) + AlgebraElement::exp(gs[n], QtScalar::q_pow(1));
    AlgebraElement g = AlgebraElement::exp(gs[n], QtScalar(2)) + AlgebraElement::exp(fs[n], t * t);
    ++r.checked;
    QtScalar lhs = cherednik_product(rs, f, g, k) / norm;
    QtScalar rhs = coeff::iota(cherednik_product(rs, g, f, k) / norm);
    if (!(lhs == rhs)) {
      r.passed = false;
      r.detail = "f=" + f.to_string() + " g=" + g.to_string();
      return r;
    }
  }
  r.detail = std::to_string(r.checked) + " pairs";
  return r;
}

}  // namespace gmult::scalar
