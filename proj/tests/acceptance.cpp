// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gmult/errors.hpp"
#include "gmult/gradedmult/gradedmult.hpp"
#include "gmult/scalar/scalar.hpp"
#include "gmult/verify/verify.hpp"

using namespace gmult;
using gradedmult::GradedMultiplicities;
using gradedmult::IntPoly;
using rootsys::RootSystem;

namespace {

const std::vector<std::string> kSuite{"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"};
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::size_t skipped = 0;
  std::string failure;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      failure = what;
    }
  }
  void take(const std::string& label, const scalar::Report& r) {
    if (r.skipped) {
      ++skipped;
      return;
    }
    expect(r.passed, label + " " + r.name + ": " + r.detail);
  }
};

const RootSystem& rs_of(const std::string& label) {
  static std::map<std::string, std::shared_ptr<const RootSystem>> cache;
  auto& p = cache[label];
  if (!p) p = RootSystem::build(label);
  return *p;
}

const GradedMultiplicities& oracle(const std::string& label) {
  static std::map<std::string, GradedMultiplicities> cache;
  auto it = cache.find(label);
  if (it != cache.end()) return it->second;
  const auto& rs = rs_of(label);
  return cache[label] = gradedmult::decompose(rs, gradedmult::exterior_character(rs));
}

IntPoly at(const GradedMultiplicities& gm, const rootsys::Weight& w) {
  auto it = gm.find(w);
  return it == gm.end() ? IntPoly() : it->second;
}

Outcome gm_zero() {
  Outcome o;
  for (const auto& l : kSuite) {
    const auto& rs = rs_of(l);
    IntPoly got = at(oracle(l), rs.zero_weight());
    o.expect(got == gradedmult::gm_formula_zero(rs), l + ": GM_0 = " + got.to_string());
  }
  return o;
}

Outcome gm_theta() {
  Outcome o;
  for (const auto& l : kSuite) {
    const auto& rs = rs_of(l);
    IntPoly got = at(oracle(l), rs.to_weight(rs.theta()));
    o.expect(got == gradedmult::gm_formula_theta(rs), l + ": GM_theta = " + got.to_string());
    o.expect(got.eval_at_one() == (std::int64_t{1} << rs.rank()) * rs.rank(),
             l + ": GM_theta(1) != 2^r r");
  }
  IntPoly b2 = at(oracle("B2"), rs_of("B2").to_weight(rs_of("B2").theta()));
  o.expect(b2.to_string() == "q + q^2 + q^4 + 2*q^5 + q^6 + q^8 + q^9", "B2 example");
  o.expect(b2.eval_at_one() == 8, "B2 value at 1");
  return o;
}

Outcome gm_theta_s() {
  Outcome o;
  for (const std::string l : {"B2", "B3", "C3", "G2", "F4"}) {
    const auto& rs = rs_of(l);
    IntPoly got = at(oracle(l), rs.to_weight(*rs.theta_s()));
    o.expect(got == gradedmult::gm_formula_theta_s(rs), l + ": GM_theta_s = " + got.to_string());
  }
  return o;
}

Outcome proposition() {
  Outcome o;
  for (const std::string l : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"})
    o.take(l, verify::verify_proposition(rs_of(l)));
  return o;
}

Outcome theorem2() {
  Outcome o;
  for (const auto& l : kSuite)
    for (int k : {1, 2}) {
      o.take(l + " k=" + std::to_string(k), scalar::verify_theorem2(rs_of(l), k));
      o.take(l + " k=" + std::to_string(k), scalar::verify_corollary(rs_of(l), k));
    }
  return o;
}

Outcome constant_term() {
  Outcome o;
  for (const auto& l : kSuite) {
    const auto& rs = rs_of(l);
    auto direct = gradedmult::delta2_constant_term_direct(rs);
    o.expect(direct == gradedmult::delta2_constant_term_formula(rs),
             l + ": [Delta_2]_0 = " + direct.to_string());
  }
  return o;
}

Outcome specializations() {
  Outcome o;
  for (const auto& l : kSuite)
    if (rs_of(l).rank() <= 3) o.take(l, verify::verify_macdonald_specializations(rs_of(l)));
  return o;
}

Outcome properties() {
  Outcome o;
  for (const auto& l : kSuite) {
    const auto& rs = rs_of(l);
    o.take(l, verify::verify_hecke_quadratic(rs, 100, 3, kSeed));
    for (int k : {1, 2}) o.take(l, scalar::verify_unitarity(rs, k, 3, 50, kSeed));
    o.take(l, verify::verify_lemma_formula_i(rs, 500, kSeed));
    o.take(l, verify::verify_lemma_formula_ii(rs));
    o.take(l, verify::verify_lemma_positive(rs));
    o.take(l, verify::verify_lemma_ht(rs));
    o.take(l, verify::verify_lemma_main(rs));
    o.take(l, verify::verify_lemma_eps(rs));
    o.take(l, verify::verify_lemma_d(rs));
  }
  return o;
}

Outcome consistency() {
  Outcome o;
  using gradedmult::Target;
  for (const auto& l : kSuite) {
    const auto& rs = rs_of(l);
    std::vector<Target> targets{Target::Zero, Target::Theta};
    if (!rs.simply_laced()) targets.push_back(Target::ThetaS);
    for (Target t : targets) {
      IntPoly got = gradedmult::gm_via_macdonald(rs, t);
      o.expect(got == at(oracle(l), gradedmult::target_weight(rs, t)),
               l + " " + gradedmult::target_name(t) + ": " + got.to_string());
    }
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"GM_0 reproduction", gm_zero},
      {"GM_theta formula and GM_theta(1) = 2^r r", gm_theta},
      {"GM_theta_s formula (B2 B3 C3 G2 F4)", gm_theta_s},
      {"Y^theta_dual proposition suite", proposition},
      {"positive-root ratio theorem and corollary, k = 1, 2", theorem2},
      {"[Delta_2]_0 product formula", constant_term},
      {"Macdonald specializations k = 0, 1", specializations},
      {"seeded property suites", properties},
      {"(1-q)^r <1,chi_lambda>_2 at q -> -q", consistency},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.failure = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s  (%zu checks", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].name,
                o.checks);
    if (o.skipped) std::printf(", %zu out of domain", o.skipped);
    std::printf(", %.1fs)\n", secs);
    if (!o.ok) {
      std::printf("  %s\n", o.failure.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
