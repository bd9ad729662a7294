#include "gmult/verify/verify.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "gmult/errors.hpp"
#include "gmult/hecke/hecke.hpp"
#include "gmult/macdonald/macdonald.hpp"
#include "gmult/weyl/weyl.hpp"

namespace gmult::verify {

using coeff::BigInt;
using coeff::IntPoly;
using coeff::QtScalar;
using groupalg::AlgebraElement;
using rootsys::RootVector;
using rootsys::Weight;
using weyl::WeylElement;

namespace {

Report fail(Report& r, std::string detail) {
  r.passed = false;
  r.detail = std::move(detail);
  return r;
}

Report skip(std::string name, std::string why) {
  Report r(std::move(name));
  r.skipped = true;
  r.detail = std::move(why);
  return r;
}

// (a, b∨) for roots
int cpair(const RootSystem& rs, const RootVector& a, const RootVector& b) {
  return rs.pair(rs.to_weight(a), b);
}

RootVector simple(const RootSystem& rs, int letter) { return RootVector::unit(rs.rank(), letter - 1); }

int lambda_of(const RootSystem& rs) { return rs.lambda_ratio().value_or(1); }

bool chain_lemma_applies(const RootSystem& rs) { return lambda_of(rs) <= 2; }

std::vector<WeylElement> all_elements(const RootSystem& rs) {
  std::map<Weight, WeylElement> seen;
  WeylElement id(rs);
  seen.emplace(id.rho_image(), id);
  std::deque<WeylElement> queue{id};
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      WeylElement v = WeylElement::simple(rs, i).compose(rs, w);
      if (seen.emplace(v.rho_image(), v).second) queue.push_back(v);
    }
  }
  std::vector<WeylElement> out;
  for (auto& [k, w] : seen) out.push_back(w);
  return out;
}

}  // namespace

Report verify_root_counts(const RootSystem& rs) {
  Report r("root counts");
  r.checked = 3;
  if (rs.roots().size() != rootsys::classification_root_count(rs.type()))
    return fail(r, "|R| = " + std::to_string(rs.roots().size()));
  if (2 * rs.positive_roots().size() != rs.roots().size())
    return fail(r, "|R+| is not |R|/2");
  if (rs.weyl_order() != rootsys::classification_weyl_order(rs.type()))
    return fail(r, "|W| table mismatch");
  if (rs.weyl_order() <= macdonald::max_weyl_order()) {
    ++r.checked;
    auto orbit = rs.weyl_orbit(rs.rho());
    if (orbit.size() != rs.weyl_order())
      return fail(r, "orbit of rho has " + std::to_string(orbit.size()) + " elements");
  }
  r.detail = "|R| = " + std::to_string(rs.roots().size()) + ", |W| = " +
             std::to_string(rs.weyl_order());
  return r;
}

Report verify_exponents(const RootSystem& rs) {
  Report r("exponent identities");
  const auto& e = rs.exponents();
  const auto& d = e.d;
  const int r_ = rs.rank();
  if (static_cast<int>(d.size()) != r_) return fail(r, "wrong number of exponents");
  int sum = 0;
  BigInt prod = 1;
  for (int x : d) {
    sum += x;
    prod *= x + 1;
  }
  ++r.checked;
  if (sum != static_cast<int>(rs.positive_roots().size())) return fail(r, "sum d_i != |R+|");
  ++r.checked;
  if (prod != BigInt(std::to_string(rs.weyl_order()))) return fail(r, "prod (d_i+1) != |W|");
  const int h = rs.theta().sum() + 1;
  for (int i = 0; i < r_; ++i) {
    ++r.checked;
    if (d[i] + d[r_ - 1 - i] != h) return fail(r, "d_i + d_{r+1-i} != h");
  }
  ++r.checked;
  if (d.front() != 1 || d.back() != h - 1) return fail(r, "d_1 != 1 or d_r != ht theta");
  for (int n = 1; n <= rs.theta().sum(); ++n) {
    int above = 0, at = 0;
    for (int x : d) above += x >= n ? 1 : 0;
    for (const auto& a : rs.positive_roots()) at += a.sum() == n ? 1 : 0;
    ++r.checked;
    if (above != at) return fail(r, "d is not the dual partition of the height count");
  }
  if (!rs.simply_laced()) {
    int shorts = 0, short_simple = 0;
    for (const auto& a : rs.positive_roots()) shorts += rs.is_short(a) ? 1 : 0;
    for (int i = 0; i < r_; ++i) short_simple += rs.simple_is_long(i) ? 0 : 1;
    int ds = 0;
    for (int x : e.d_s) ds += x;
    ++r.checked;
    if (ds != shorts) return fail(r, "sum d_s != |R_s+|");
    ++r.checked;
    if (e.r_s != short_simple || e.r_l + e.r_s != r_) return fail(r, "r_s, r_l mismatch");
    ++r.checked;
    if (static_cast<int>(e.d_s.size()) != e.r_s) return fail(r, "|d_s| != r_s");
  }
  r.detail = "d = (";
  for (std::size_t i = 0; i < d.size(); ++i) r.detail += (i ? "," : "") + std::to_string(d[i]);
  r.detail += ")";
  return r;
}

Report verify_lemma_formula_i(const RootSystem& rs, int samples, std::uint64_t seed) {
  Report r("l:formula(i)");
  std::vector<WeylElement> ws;
  if (rs.weyl_order() <= 5000) {
    ws = all_elements(rs);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> letter(1, rs.rank());
    std::uniform_int_distribution<int> len(0, 2 * static_cast<int>(rs.positive_roots().size()));
    for (int n = 0; n < samples; ++n) {
      weyl::Word word(static_cast<std::size_t>(len(rng)));
      for (auto& x : word) x = letter(rng);
      ws.push_back(WeylElement::from_word(rs, word));
    }
  }
  for (const auto& w : ws) {
    const auto& word = w.reduced_word();
    const auto chain = weyl::root_chain(rs, word);
    const std::size_t n = word.size();
    std::set<RootVector> from_chain;
    for (const auto& a : chain) from_chain.insert(a.root);
    auto inv = weyl::inversion_set(rs, w);
    if (from_chain != std::set<RootVector>(inv.begin(), inv.end()))
      return fail(r, "chain of " + weyl::word_to_string(word) + " is not S(w)");
    for (const auto& beta : rs.roots()) {
      RootVector rhs = beta;
      for (std::size_t i = 1; i <= n; ++i)
        rhs -= cpair(rs, beta, chain[i - 1].root) * simple(rs, word[n - i]);
      ++r.checked;
      if (!(rhs == w.apply(rs, beta)))
        return fail(r, "w = " + weyl::word_to_string(word) + ", beta = " + beta.to_string());
    }
  }
  r.detail = std::to_string(ws.size()) + " elements x " + std::to_string(rs.roots().size()) + " roots";
  return r;
}

Report verify_lemma_formula_ii(const RootSystem& rs) {
  Report r("l:formula(ii)");
  const int lam = lambda_of(rs);
  for (const auto& beta : rs.positive_roots()) {
    if (!rs.is_long(beta)) continue;
    int nl = 0, ns = 0;
    for (const auto& a : weyl::inversion_set(rs, WeylElement::reflection(rs, beta)))
      (rs.is_long(a) ? nl : ns)++;
    auto ht = rs.heights(beta);
    ++r.checked;
    if (nl != 2 * ht.ht_l - 1 || ns * lam != 2 * ht.ht_s)
      return fail(r, "beta = " + beta.to_string() + ": " + std::to_string(nl) + " long, " +
                         std::to_string(ns) + " short");
  }
  r.detail = std::to_string(r.checked) + " long positive roots";
  return r;
}

Report verify_lemma_positive(const RootSystem& rs) {
  if (rs.simply_laced()) return skip("l:>0", "simply laced: no short roots");
  Report r("l:>0");
  const auto& R = rs.roots();
  for (const auto& beta : R) {
    if (!rs.is_long(beta)) continue;
    for (const auto& alpha : R) {
      if (!rs.is_short(alpha) || cpair(rs, alpha, beta) <= 0) continue;
      for (const auto& gamma : R) {
        if (cpair(rs, gamma, beta) <= 0) continue;
        ++r.checked;
        int v = cpair(rs, gamma, alpha);
        if (v < 0) return fail(r, "(gamma, alpha^) < 0 for gamma = " + gamma.to_string());
        if (rs.is_short(gamma) && !(alpha + gamma == beta) && v == 0)
          return fail(r, "strict inequality fails for gamma = " + gamma.to_string());
      }
    }
  }
  r.detail = std::to_string(r.checked) + " triples";
  return r;
}

Report verify_lemma_ht(const RootSystem& rs) {
  if (rs.simply_laced()) return skip("l:ht", "simply laced: no short roots");
  Report r("l:ht");
  const int lam = lambda_of(rs);
  const auto& theta = rs.theta();
  const int lt = rs.heights(theta).ht_l;
  for (const auto& a : rs.roots()) {
    if (!rs.is_short(a) || rs.inner(a, theta) == 0) continue;
    RootVector v = lam * a - theta;
    if (!rs.is_root(v) || v.sum() <= 0) continue;
    ++r.checked;
    if (lam * rs.heights(a).ht_l != lt + 1) return fail(r, "alpha = " + a.to_string());
  }
  if (r.checked == 0) return fail(r, "no root satisfies the hypothesis");
  r.detail = std::to_string(r.checked) + " short roots";
  return r;
}

Report verify_lemma_main(const RootSystem& rs) {
  if (!chain_lemma_applies(rs)) return skip("l:main", "Lambda = 3 (G2 has its own case)");
  Report r("l:main");
  const auto c = weyl::symmetric_decomposition_of_s_theta(rs);
  const int p = c.p;
  const auto& theta = rs.theta();
  const int L = rs.L(), S = rs.S();
  for (int i = 0; i <= p; ++i)
    if (c.letter(i) != c.letter(-i)) return fail(r, "decomposition is not symmetric");
  ++r.checked;
  if (2 * p + 1 != 2 * L + S - 1) return fail(r, "2p+1 != 2L+S-1");
  {
    auto inv = weyl::inversion_set(rs, WeylElement::reflection(rs, theta));
    std::set<RootVector> a(c.chain.begin(), c.chain.end()), b(inv.begin(), inv.end());
    ++r.checked;
    if (a != b) return fail(r, "chain is not S(s_theta)");
  }
  // (a)
  ++r.checked;
  if (!(c.at(0) == theta)) return fail(r, "(a): alpha^(0) != theta");
  for (int i = 1; i <= p; ++i) {
    ++r.checked;
    if (!(c.at(-i) == theta - c.at(i))) return fail(r, "(a) fails at i = " + std::to_string(i));
  }
  for (int i = -p; i <= p; ++i) {
    if (!rs.is_short(c.at(i))) continue;
    for (int k = -p; k <= p; ++k) {
      const int v = cpair(rs, c.at(i), c.at(k));
      if (rs.is_short(c.at(k))) {  // (b)
        int want = k == i ? 2 : (k == -i ? 0 : 1);
        ++r.checked;
        if (v != want)
          return fail(r, "(b) fails at i = " + std::to_string(i) + ", k = " + std::to_string(k));
      } else if (k != 0) {  // (c)
        const int w = cpair(rs, c.at(i), c.at(-k));
        ++r.checked;
        if (!((v == 1 && w == 0) || (v == 0 && w == 1)))
          return fail(r, "(c) fails at i = " + std::to_string(i) + ", k = " + std::to_string(k));
      }
    }
    // (d)
    const int sgn = i > 0 ? 1 : -1;
    ++r.checked;
    if (2 * rs.heights(c.at(i)).ht_l != L + sgn)
      return fail(r, "(d) fails at i = " + std::to_string(i));
  }
  // (e)
  std::vector<RootVector> betas;
  for (const auto& a : c.chain)
    if (rs.is_short(a)) betas.push_back(a);
  ++r.checked;
  if (static_cast<int>(betas.size()) != (rs.simply_laced() ? 0 : S))
    return fail(r, "(e): number of short roots in the chain");
  for (std::size_t m = 1; m <= betas.size(); ++m) {
    const int target = (L - 1) / 2 + static_cast<int>(m);
    ++r.checked;
    if (rs.inner(betas[m - 1], theta) <= 0 || betas[m - 1].sum() != target)
      return fail(r, "(e) fails at m = " + std::to_string(m));
    int count = 0;
    for (const auto& g : rs.roots())
      if (rs.is_short(g) && rs.inner(g, theta) > 0 && g.sum() == target) ++count;
    ++r.checked;
    if (count != 1) return fail(r, "(e): beta_m not unique at m = " + std::to_string(m));
  }
  // (f)
  if (rs.theta_s()) {
    ++r.checked;
    if (std::find(c.chain.begin(), c.chain.end(), *rs.theta_s()) == c.chain.end())
      return fail(r, "(f): theta_s not in S(s_theta)");
    ++r.checked;
    if (2 * rs.theta_s()->sum() != L - 1 + 2 * S) return fail(r, "(f): ht theta_s");
  }
  r.detail = "s_theta = " + weyl::word_to_string(c.word);
  return r;
}

Report verify_lemma_eps(const RootSystem& rs) {
  if (rs.simply_laced()) return skip("l:eps", "simply laced: no short roots");
  if (!chain_lemma_applies(rs)) return skip("l:eps", "Lambda = 3 (G2 has its own case)");
  Report r("l:eps");
  const auto c = weyl::symmetric_decomposition_of_s_theta(rs);
  const int p = c.p;
  for (int i = -p; i <= p; ++i) {
    if (!rs.is_short(c.at(i))) continue;
    for (int m = -p; m <= p; ++m) {
      RootVector before = c.at(i);  // s_{j_{m-1}} ... s_{j_{-p}} α^(i)
      for (int x = -p; x < m; ++x) before = rs.reflect(c.letter(x) - 1, before);
      RootVector after = before;
      int eps = 0, pairs = 0;
      for (int n = m; n <= p; ++n) {
        eps += weyl::epsilon(rs, c.at(i), c.at(n));
        pairs += cpair(rs, c.at(i), c.at(n));
        after = rs.reflect(c.letter(n) - 1, after);
        const int one = (m <= i && i <= n) ? 1 : 0;
        const int mid = n - m + 1 + 2 * (-pairs + one);
        const int right = n - m + 1 + 2 * ((after - before).sum() + one);
        ++r.checked;
        if (eps != mid || eps != right)
          return fail(r, "i = " + std::to_string(i) + ", m = " + std::to_string(m) +
                             ", n = " + std::to_string(n));
      }
    }
  }
  r.detail = std::to_string(r.checked) + " (i, m, n) triples";
  return r;
}

Report verify_lemma_d(const RootSystem& rs) {
  Report r("l:d");
  for (int k = -3; k <= 3; ++k) {
    if (k == 0) continue;
    for (int l = -2; l <= 2; ++l) {
      auto s = gradedmult::lemma_d_sum(rs, k, l);
      ++r.checked;
      if (!(s.lhs == s.rhs))
        return fail(r, "k = " + std::to_string(k) + ", l = " + std::to_string(l));
    }
  }
  r.detail = std::to_string(r.checked) + " (k, l) pairs";
  return r;
}

Report verify_hecke_quadratic(const RootSystem& rs, int samples, int sample_bound,
                              std::uint64_t seed) {
  Report r("hecke quadratic");
  std::mt19937_64 rng(seed);
  auto pool = scalar::sample_weights(rs, sample_bound, 3 * samples, seed + 1);
  std::uniform_int_distribution<int> letter(0, rs.rank());
  std::uniform_int_distribution<int> coef(-3, 3), expo(-2, 2), terms(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const QtScalar h = QtScalar::h();
  for (int n = 0; n < samples; ++n) {
    AlgebraElement f;
    for (int j = terms(rng); j > 0; --j) {
      int c = coef(rng);
      f.add_term(pool[pick(rng)], QtScalar::qt(expo(rng), expo(rng), c == 0 ? 1 : c));
    }
    const int i = letter(rng);
    AlgebraElement tf = hecke::apply_T(rs, i, f);
    AlgebraElement res = hecke::apply_T(rs, i, tf) - tf * h - f;
    ++r.checked;
    if (!res.is_zero())
      return fail(r, "T_" + std::to_string(i) + " on " + f.to_string());
    ++r.checked;
    if (!(hecke::apply_T_inverse(rs, i, tf) == f))
      return fail(r, "T_" + std::to_string(i) + "^-1 T_" + std::to_string(i) + " on " + f.to_string());
  }
  r.detail = std::to_string(samples) + " samples";
  return r;
}

Report verify_proposition(const RootSystem& rs) {
  Report r(rs.type().letter == 'G' ? "proposition (G2 case)" : "proposition");
  const auto forms = hecke::proposition_expected(rs);
  const auto Y = hecke::build_Y_theta_dual(rs);
  const auto Yt = hecke::build_T_product(rs, weyl::reduced_word_tau_theta(rs));
  auto one = [&](const char* name, const Weight& mu, const AlgebraElement& want) {
    AlgebraElement e = AlgebraElement::exp(mu);
    AlgebraElement a = Y.apply(rs, e);
    AlgebraElement b = Yt.apply(rs, e);
    ++r.checked;
    if (!(a == want)) {
      fail(r, std::string(name) + ": G route gives " + a.to_string());
      return false;
    }
    ++r.checked;
    if (!(b == want)) {
      fail(r, std::string(name) + ": T_i route gives " + b.to_string());
      return false;
    }
    return true;
  };
  if (!one("e^0", rs.zero_weight(), forms.on_zero)) return r;
  if (!one("e^theta", rs.to_weight(rs.theta()), forms.on_theta)) return r;
  if (forms.on_theta_s && !one("e^theta_s", rs.to_weight(*rs.theta_s()), *forms.on_theta_s))
    return r;
  r.detail = std::to_string(r.checked / 2) + " evaluations, both routes";
  return r;
}

Report verify_macdonald_specializations(const RootSystem& rs) {
  if (rs.rank() > 3) return skip("macdonald k=0,1", "rank > 3");
  Report r("macdonald k=0,1");
  for (const auto& lambda : macdonald::dominant_weights_up_to_height(rs, rs.theta().sum())) {
    auto p0 = macdonald::macdonald_poly(rs, lambda, 0);
    ++r.checked;
    if (!(p0.expansion == groupalg::orbit_sum(rs, lambda)))
      return fail(r, "k=0 at " + lambda.to_string());
    auto p1 = macdonald::macdonald_poly(rs, lambda, 1);
    ++r.checked;
    if (!(p1.expansion == macdonald::weyl_character(rs, lambda)))
      return fail(r, "k=1 at " + lambda.to_string());
  }
  r.detail = std::to_string(r.checked / 2) + " dominant weights";
  return r;
}

Report verify_theta_s_character(const RootSystem& rs) {
  if (rs.simply_laced()) return skip("chi_theta_s", "simply laced");
  Report r("chi_theta_s");
  const Weight ts = rs.to_weight(*rs.theta_s());
  const Weight zero = rs.zero_weight();
  AlgebraElement m = groupalg::orbit_sum(rs, ts);
  AlgebraElement chi = macdonald::weyl_character(rs, ts);
  ++r.checked;
  if (!(chi == m + AlgebraElement::exp(zero, QtScalar(static_cast<long>(rs.exponents().r_s)))))
    return fail(r, "chi_theta_s != m_theta_s + r_s");
  for (int k = 1; k <= 2; ++k) {
    auto P = macdonald::macdonald_poly(rs, ts, k).expansion;
    ++r.checked;
    if (!(P == m - AlgebraElement::exp(zero, scalar::cherednik_ratio(rs, m, k))))
      return fail(r, "P_theta_s != m - (m,1)/(1,1) at k = " + std::to_string(k));
    if (k == 1) {
      ++r.checked;
      if (!(P == chi)) return fail(r, "P_theta_s at k = 1 != chi_theta_s");
    }
  }
  return r;
}

Report verify_constant_term(const RootSystem& rs) {
  Report r("[Delta_2]_0");
  r.checked = 1;
  QtScalar a = gradedmult::delta2_constant_term_direct(rs);
  QtScalar b = gradedmult::delta2_constant_term_formula(rs);
  if (!(a == b)) return fail(r, a.to_string() + " != " + b.to_string());
  r.detail = a.to_string();
  return r;
}

Report verify_short_root_ratio(const RootSystem& rs, int k) {
  std::string name = "short-root ratio k=" + std::to_string(k);
  if (rs.simply_laced()) return skip(name, "simply laced");
  Report r(name);
  r.checked = 1;
  QtScalar a = gradedmult::short_root_ratio_direct(rs, k);
  QtScalar b = gradedmult::short_root_ratio_formula(rs, k);
  if (!(a == b)) return fail(r, a.to_string() + " != " + b.to_string());
  return r;
}

namespace {

IntPoly oracle_at(const gradedmult::GradedMultiplicities& gm, const Weight& w) {
  auto it = gm.find(w);
  return it == gm.end() ? IntPoly() : it->second;
}

Report compare_gm(const char* name, const IntPoly& oracle, const IntPoly& formula) {
  Report r(name);
  r.checked = 1;
  if (!(oracle == formula))
    return fail(r, "decompose " + oracle.to_string() + " != formula " + formula.to_string());
  r.detail = oracle.to_string();
  return r;
}

}  // namespace

Report verify_gm_zero(const RootSystem& rs, const gradedmult::GradedMultiplicities& oracle) {
  return compare_gm("GM_0", oracle_at(oracle, rs.zero_weight()), gradedmult::gm_formula_zero(rs));
}

Report verify_gm_theta(const RootSystem& rs, const gradedmult::GradedMultiplicities& oracle) {
  IntPoly g = oracle_at(oracle, rs.to_weight(rs.theta()));
  Report r = compare_gm("GM_theta", g, gradedmult::gm_formula_theta(rs));
  if (!r.passed) return r;
  ++r.checked;
  std::int64_t want = (std::int64_t{1} << rs.rank()) * rs.rank();
  if (g.eval_at_one() != want) return fail(r, "GM_theta(1) != 2^r r");
  return r;
}

Report verify_gm_theta_s(const RootSystem& rs, const gradedmult::GradedMultiplicities& oracle) {
  if (rs.simply_laced()) return skip("GM_theta_s", "simply laced");
  return compare_gm("GM_theta_s", oracle_at(oracle, rs.to_weight(*rs.theta_s())),
                    gradedmult::gm_formula_theta_s(rs));
}

Report verify_gm_macdonald(const RootSystem& rs, const gradedmult::GradedMultiplicities& oracle) {
  using gradedmult::Target;
  Report r("GM via <1,chi>_2");
  std::vector<Target> targets{Target::Zero, Target::Theta};
  if (!rs.simply_laced()) targets.push_back(Target::ThetaS);
  for (Target t : targets) {
    IntPoly got = gradedmult::gm_via_macdonald(rs, t);
    ++r.checked;
    if (!(got == oracle_at(oracle, gradedmult::target_weight(rs, t))))
      return fail(r, gradedmult::target_name(t) + ": " + got.to_string());
  }
  ++r.checked;
  std::string routes = gradedmult::check_theta_ratio_routes(rs);
  if (!routes.empty()) return fail(r, "theta ratio: " + routes);
  return r;
}

bool TypeReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Report& r) { return r.passed; });
}

TypeReport run_suite(const RootSystem& rs, const SuiteConfig& cfg) {
  TypeReport out;
  out.label = rs.label();
  auto run = [&](const std::string& name, const std::function<Report()>& f) {
    try {
      out.checks.push_back(f());
    } catch (const BudgetExceeded& e) {
      out.checks.push_back(skip(name, std::string("budget: ") + e.what()));
    } catch (const std::exception& e) {
      Report r(name);
      fail(r, std::string("error: ") + e.what());
      out.checks.push_back(r);
    }
  };
  run("root counts", [&] { return verify_root_counts(rs); });
  run("exponent identities", [&] { return verify_exponents(rs); });
  run("l:formula(i)", [&] { return verify_lemma_formula_i(rs, cfg.formula_samples, cfg.seed); });
  run("l:formula(ii)", [&] { return verify_lemma_formula_ii(rs); });
  run("l:>0", [&] { return verify_lemma_positive(rs); });
  run("l:ht", [&] { return verify_lemma_ht(rs); });
  run("l:main", [&] { return verify_lemma_main(rs); });
  run("l:eps", [&] { return verify_lemma_eps(rs); });
  run("hecke quadratic", [&] {
    return verify_hecke_quadratic(rs, cfg.hecke_samples, cfg.sample_bound, cfg.seed);
  });
  run("proposition", [&] { return verify_proposition(rs); });
  for (int k : cfg.ks) {
    std::string ks = " k=" + std::to_string(k);
    run("unitarity" + ks, [&] {
      return scalar::verify_unitarity(rs, k, cfg.sample_bound, cfg.unitarity_pairs, cfg.seed + k);
    });
    run("unitarity identity" + ks, [&] { return scalar::verify_unitarity_identity(rs, k); });
  }
  for (int k : cfg.ks) {
    std::string ks = " k=" + std::to_string(k);
    run("theorem2" + ks, [&] { return scalar::verify_theorem2(rs, k); });
    run("corollary" + ks, [&] { return scalar::verify_corollary(rs, k); });
  }
  for (int k : cfg.ks)
    run("convexity k=" + std::to_string(k), [&] { return scalar::verify_convexity_theorem(rs, k); });
  run("l:d", [&] { return verify_lemma_d(rs); });
  if (cfg.include_gm) {
    run("[Delta_2]_0", [&] { return verify_constant_term(rs); });
    for (int k : cfg.ks)
      run("short-root ratio k=" + std::to_string(k), [&] { return verify_short_root_ratio(rs, k); });
    run("macdonald k=0,1", [&] { return verify_macdonald_specializations(rs); });
    run("chi_theta_s", [&] { return verify_theta_s_character(rs); });
    gradedmult::GradedMultiplicities oracle;
    bool have_oracle = false;
    run("exterior character", [&] {
      Report r("exterior character");
      auto ec = gradedmult::exterior_character(rs);
      std::string bad = gradedmult::check_exterior_character(rs, ec);
      r.checked = 1;
      if (!bad.empty()) return fail(r, bad);
      oracle = gradedmult::decompose(rs, ec);
      have_oracle = true;
      BigInt mass = 0;
      for (const auto& [lambda, g] : oracle) {
        BigInt dim(macdonald::weyl_dimension(rs, lambda).get_num());
        mass += dim * BigInt(static_cast<long>(g.eval_at_one()));
      }
      BigInt want;
      mpz_ui_pow_ui(want.get_mpz_t(), 2, static_cast<unsigned long>(rs.dim_g()));
      ++r.checked;
      if (mass != want) return fail(r, "sum GM_lambda(1) dim V(lambda) != 2^dim g");
      r.detail = std::to_string(oracle.size()) + " nonzero GM_lambda";
      return r;
    });
    if (have_oracle) {
      run("GM_0", [&] { return verify_gm_zero(rs, oracle); });
      run("GM_theta", [&] { return verify_gm_theta(rs, oracle); });
      run("GM_theta_s", [&] { return verify_gm_theta_s(rs, oracle); });
      run("GM via <1,chi>_2", [&] { return verify_gm_macdonald(rs, oracle); });
    } else {
      for (const char* n : {"GM_0", "GM_theta", "GM_theta_s", "GM via <1,chi>_2"})
        out.checks.push_back(skip(n, "no decomposition oracle"));
    }
  }
  return out;
}

std::vector<TypeReport> run_suites(const std::vector<std::string>& labels, const SuiteConfig& cfg,
                                   unsigned threads) {
  std::vector<TypeReport> out(labels.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < labels.size();) {
      auto rs = RootSystem::build(labels[i]);
      out[i] = run_suite(*rs, cfg);
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(labels.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace gmult::verify
