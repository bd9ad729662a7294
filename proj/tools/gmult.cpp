// gmult: command-line front end. Weights are given in fundamental-weight
// coordinates, e.g. "e[1,0]"; roots are printed in simple-root coordinates.
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmult/errors.hpp"
#include "gmult/gradedmult/gradedmult.hpp"
#include "gmult/hecke/hecke.hpp"
#include "gmult/macdonald/macdonald.hpp"
#include "gmult/verify/verify.hpp"
#include "gmult/weyl/weyl.hpp"

using namespace gmult;
using json = nlohmann::ordered_json;
using groupalg::AlgebraElement;
using rootsys::RootSystem;
using rootsys::Weight;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
  std::string type_label;
  std::vector<std::string> types;
  int k = 1;
  std::string method = "cross-check";
  std::string lambda;
  bool json = false;
  bool latex = false;
  std::uint64_t seed = verify::SuiteConfig{}.seed;
  int sample_bound = verify::SuiteConfig{}.sample_bound;
  int pairs = verify::SuiteConfig{}.unitarity_pairs;
  unsigned threads = 0;
  // budgets; 0 keeps the environment / built-in default
  long long max_weyl_order = 0;
  int max_k = 0;
  long long max_kernel_terms = 0;
  bool allow_slow = false;
};

void export_budgets(const RunConfig& c) {
  if (c.max_weyl_order > 0) setenv("GMULT_MAX_WEYL_ORDER", std::to_string(c.max_weyl_order).c_str(), 1);
  if (c.max_k > 0) setenv("GMULT_MAX_K", std::to_string(c.max_k).c_str(), 1);
  if (c.max_kernel_terms > 0)
    setenv("GMULT_MAX_KERNEL_TERMS", std::to_string(c.max_kernel_terms).c_str(), 1);
  if (c.allow_slow) setenv("GMULT_ALLOW_SLOW", "1", 1);
}

template <class V>
json vec(const V& v) {
  return json(v.to_vector());
}

json element_json(const AlgebraElement& f) {
  json out = json::array();
  for (const auto& [mu, c] : f.terms()) out.push_back({{"weight", vec(mu)}, {"coeff", c.to_string()}});
  return out;
}

Weight parse_lambda(const RootSystem& rs, std::string text) {
  if (text.find('[') == std::string::npos) text = "[" + text + "]";
  return groupalg::parse_weight(rs, text);
}

// ---------------------------------------------------------------------------

int cmd_roots(const RunConfig& c) {
  auto rs = RootSystem::build(c.type_label);
  const auto& e = rs->exponents();
  if (c.json) {
    json roots = json::array();
    for (const auto& a : rs->roots()) roots.push_back(vec(a));
    json out{{"type", rs->label()},
             {"roots", roots},
             {"theta", vec(rs->theta())},
             {"theta_s", rs->theta_s() ? vec(*rs->theta_s()) : json(nullptr)},
             {"exponents", e.d},
             {"short_exponents", e.d_s}};
    std::cout << out.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "type " << rs->label() << "  |R| = " << rs->roots().size()
            << "  |W| = " << rs->weyl_order() << "  dim g = " << rs->dim_g() << "\n";
  std::cout << "positive roots (simple-root coordinates, height, length):\n";
  for (const auto& a : rs->positive_roots())
    std::cout << "  " << a.to_string() << "  ht " << a.sum() << "  "
              << (rs->is_long(a) ? "long" : "short") << "\n";
  std::cout << "theta   " << rs->theta().to_string() << "\n";
  std::cout << "theta_s " << (rs->theta_s() ? rs->theta_s()->to_string() : "-") << "\n";
  std::cout << "exponents";
  for (int d : e.d) std::cout << " " << d;
  std::cout << "\n";
  if (!rs->simply_laced()) {
    std::cout << "short exponents";
    for (int d : e.d_s) std::cout << " " << d;
    std::cout << "\nr_l = " << e.r_l << ", r_s = " << e.r_s << "\n";
  }
  return kExitPass;
}

int cmd_weyl(const RunConfig& c) {
  auto rs = RootSystem::build(c.type_label);
  auto chain = weyl::symmetric_decomposition_of_s_theta(*rs);
  if (c.json) {
    json items = json::array();
    for (int i = -chain.p; i <= chain.p; ++i) {
      const auto& a = chain.at(i);
      items.push_back({{"i", i},
                       {"letter", chain.letter(i)},
                       {"root", vec(a)},
                       {"height", a.sum()},
                       {"long", rs->is_long(a)}});
    }
    json out{{"type", rs->label()},
             {"word", chain.word},
             {"p", chain.p},
             {"j0", chain.j0},
             {"tau_theta_word", weyl::reduced_word_tau_theta(*rs)},
             {"chain", items}};
    std::cout << out.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "s_theta = " << weyl::word_to_string(chain.word) << "  (p = " << chain.p << ")\n";
  std::cout << "tau(theta^) = " << weyl::word_to_string(weyl::reduced_word_tau_theta(*rs)) << "\n";
  std::cout << "chain:\n";
  for (int i = -chain.p; i <= chain.p; ++i) {
    const auto& a = chain.at(i);
    std::cout << "  alpha(" << i << ") = " << a.to_string() << "  s" << chain.letter(i) << "  ht "
              << a.sum() << "  " << (rs->is_long(a) ? "long" : "short") << "\n";
  }
  return kExitPass;
}

hecke::HeckeOperator parse_operator(const RootSystem& rs, const std::string& op) {
  if (op == "Y_theta_dual") return hecke::build_Y_theta_dual(rs);
  if (op == "Y_minus_theta_dual") return hecke::build_Y_minus_theta_dual(rs);
  if (op.size() >= 2 && op[0] == 'T') {
    bool inverse = op.size() > 4 && op.substr(op.size() - 3) == "^-1";
    std::string digits = op.substr(1, op.size() - 1 - (inverse ? 3 : 0));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      int i = std::stoi(digits);
      if (i > rs.rank()) throw InvalidArgument("letter " + digits + " out of range");
      if (inverse) return hecke::HeckeOperator({hecke::TInverseStep{i}});
      return hecke::HeckeOperator({hecke::TStep{i}});
    }
  }
  throw InvalidArgument("unknown operator '" + op + "' (Y_theta_dual, Y_minus_theta_dual, T<i>, T<i>^-1)");
}

int cmd_hecke(const RunConfig& c, const std::string& apply, const std::string& to,
              const std::string& check) {
  auto rs = RootSystem::build(c.type_label);
  if (!check.empty()) {
    if (check != "proposition") throw InvalidArgument("unknown check '" + check + "'");
    auto r = verify::verify_proposition(*rs);
    if (c.json) {
      std::cout << json{{"type", rs->label()}, {"check", r.name}, {"passed", r.passed}, {"detail", r.detail}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << rs->label() << " " << r.name << ": " << (r.passed ? "pass" : "FAIL") << "  "
                << r.detail << "\n";
    }
    return r.passed ? kExitPass : kExitCheckFailed;
  }
  if (apply.empty() || to.empty()) throw InvalidArgument("hecke needs --apply and --to, or --check");
  auto result = parse_operator(*rs, apply).apply(*rs, groupalg::parse_element(*rs, to));
  if (c.json)
    std::cout << element_json(result).dump(2) << "\n";
  else
    std::cout << result.to_string() << "\n";
  return kExitPass;
}

int cmd_scalar(const RunConfig& c, const std::string& ratio, const std::string& what) {
  auto rs = RootSystem::build(c.type_label);
  if (!ratio.empty()) {
    auto v = scalar::cherednik_ratio(*rs, groupalg::parse_element(*rs, ratio), c.k);
    if (c.json)
      std::cout << json{{"type", rs->label()}, {"k", c.k}, {"ratio", v.to_string()}}.dump(2) << "\n";
    else
      std::cout << v.to_string() << "\n";
    return kExitPass;
  }
  if (what.empty()) throw InvalidArgument("scalar needs --ratio or --verify");
  scalar::Report r;
  if (what == "theorem2")
    r = scalar::verify_theorem2(*rs, c.k);
  else if (what == "corollary")
    r = scalar::verify_corollary(*rs, c.k);
  else if (what == "unitarity")
    r = scalar::verify_unitarity(*rs, c.k, c.sample_bound, c.pairs, c.seed);
  else if (what == "convexity")
    r = scalar::verify_convexity_theorem(*rs, c.k);
  else if (what == "symmetry")
    r = scalar::verify_cherednik_symmetry(*rs, c.k, c.sample_bound, c.pairs, c.seed);
  else
    throw InvalidArgument("unknown check '" + what + "'");
  if (c.json)
    std::cout << json{{"type", rs->label()}, {"check", r.name}, {"passed", r.passed}, {"checked", r.checked},
                      {"detail", r.detail}}
                     .dump(2)
              << "\n";
  else
    std::cout << rs->label() << " " << r.name << ": " << (r.passed ? "pass" : "FAIL") << "  " << r.detail
              << "\n";
  return r.passed ? kExitPass : kExitCheckFailed;
}

int cmd_macdonald(const RunConfig& c) {
  auto rs = RootSystem::build(c.type_label);
  auto p = macdonald::macdonald_poly(*rs, parse_lambda(*rs, c.lambda), c.k);
  if (c.json) {
    json orbit = json::array();
    for (const auto& [mu, a] : p.orbit_coefficients)
      orbit.push_back({{"weight", vec(mu)}, {"coeff", a.to_string()}});
    std::cout << json{{"type", rs->label()},
                      {"k", c.k},
                      {"lambda", vec(p.lambda)},
                      {"expansion", element_json(p.expansion)},
                      {"orbit_sums", orbit}}
                     .dump(2)
              << "\n";
    return kExitPass;
  }
  std::cout << "P" << p.lambda.to_string() << " at k = " << c.k << "\n";
  std::cout << "in e^mu:\n  " << p.expansion.to_string() << "\n";
  std::cout << "in m_mu:\n";
  for (auto it = p.orbit_coefficients.rbegin(); it != p.orbit_coefficients.rend(); ++it)
    std::cout << "  m" << it->first.to_string() << "  " << it->second.to_string() << "\n";
  return kExitPass;
}

// ---------------------------------------------------------------------------

struct GmRow {
  Weight lambda;
  std::string name;
  std::map<std::string, coeff::IntPoly> by_method;
  std::vector<std::string> notes;
  bool agree = true;
};

int cmd_gm(const RunConfig& c) {
  auto rs = RootSystem::build(c.type_label);
  const std::string& m = c.method;
  if (m != "oracle" && m != "macdonald" && m != "formula" && m != "cross-check")
    throw InvalidArgument("unknown method '" + m + "'");
  const bool want_oracle = m == "oracle" || m == "cross-check";
  const bool want_mac = m == "macdonald" || m == "cross-check";
  const bool want_formula = m == "formula" || m == "cross-check";
  const std::string which = c.lambda.empty() ? "all" : c.lambda;

  std::optional<gradedmult::GradedMultiplicities> oracle;
  std::string oracle_note;
  if (want_oracle) {
    try {
      oracle = gradedmult::decompose(*rs, gradedmult::exterior_character(*rs));
    } catch (const BudgetExceeded& e) {
      if (m == "oracle") throw;
      oracle_note = std::string("oracle skipped: ") + e.what();
    }
  }

  std::vector<GmRow> rows;
  auto add_target = [&](gradedmult::Target t) {
    GmRow row;
    row.lambda = gradedmult::target_weight(*rs, t);
    row.name = gradedmult::target_name(t);
    if (oracle) {
      auto it = oracle->find(row.lambda);
      row.by_method["oracle"] = it == oracle->end() ? coeff::IntPoly() : it->second;
    } else if (!oracle_note.empty()) {
      row.notes.push_back(oracle_note);
    }
    if (want_mac) {
      try {
        row.by_method["macdonald"] = gradedmult::gm_via_macdonald(*rs, t);
      } catch (const BudgetExceeded& e) {
        if (m == "macdonald") throw;
        row.notes.push_back(std::string("macdonald skipped: ") + e.what());
      }
    }
    if (want_formula) {
      switch (t) {
        case gradedmult::Target::Zero: row.by_method["formula"] = gradedmult::gm_formula_zero(*rs); break;
        case gradedmult::Target::Theta: row.by_method["formula"] = gradedmult::gm_formula_theta(*rs); break;
        case gradedmult::Target::ThetaS: row.by_method["formula"] = gradedmult::gm_formula_theta_s(*rs); break;
      }
    }
    rows.push_back(std::move(row));
  };

  if (which == "all" && m == "oracle") {
    for (const auto& [lambda, g] : *oracle) {
      GmRow row;
      row.lambda = lambda;
      row.name = lambda.to_string();
      row.by_method["oracle"] = g;
      rows.push_back(std::move(row));
    }
  } else if (which == "all") {
    add_target(gradedmult::Target::Zero);
    if (!rs->simply_laced()) add_target(gradedmult::Target::ThetaS);
    add_target(gradedmult::Target::Theta);
  } else {
    add_target(gradedmult::parse_target(which));
  }

  bool all_agree = true;
  for (auto& row : rows) {
    if (row.by_method.empty()) throw BudgetExceeded("no method within budget for " + row.name);
    const auto& first = row.by_method.begin()->second;
    for (const auto& [name, p] : row.by_method)
      if (!(p == first)) row.agree = false;
    all_agree = all_agree && row.agree;
  }

  if (c.json) {
    json out = json::array();
    for (const auto& row : rows) {
      json poly = json::object();
      for (const auto& [d, coef] : row.by_method.begin()->second.to_map()) poly[std::to_string(d)] = coef;
      json methods = json::array();
      for (const auto& [name, p] : row.by_method) methods.push_back(name);
      json item{{"lambda", vec(row.lambda)}, {"poly", poly}, {"methods_agree", row.agree}, {"methods", methods}};
      if (!row.notes.empty()) item["notes"] = row.notes;
      out.push_back(item);
    }
    std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  } else {
    for (const auto& row : rows) {
      const auto& p = row.by_method.begin()->second;
      std::cout << "GM_" << row.name << "  " << (c.latex ? p.to_latex() : p.to_string());
      if (row.by_method.size() > 1) {
        std::cout << "  [";
        bool first = true;
        for (const auto& [name, q] : row.by_method) {
          std::cout << (first ? "" : ", ") << name;
          first = false;
        }
        std::cout << (row.agree ? ": agree]" : ": DISAGREE]");
      }
      std::cout << "\n";
      if (!row.agree)
        for (const auto& [name, q] : row.by_method) std::cout << "  " << name << ": " << q.to_string() << "\n";
      for (const auto& n : row.notes) std::cout << "  note: " << n << "\n";
    }
  }
  return all_agree ? kExitPass : kExitCheckFailed;
}

int cmd_verify(const RunConfig& c) {
  verify::SuiteConfig cfg;
  cfg.seed = c.seed;
  cfg.sample_bound = c.sample_bound;
  cfg.unitarity_pairs = c.pairs;
  std::vector<std::string> labels;
  for (const auto& t : c.types) labels.push_back(rootsys::CartanType::parse(t).label());
  unsigned threads = c.threads ? c.threads : std::max(1u, std::thread::hardware_concurrency());
  auto reports = verify::run_suites(labels, cfg, threads);

  bool ok = true;
  for (const auto& t : reports) ok = ok && t.passed();
  if (c.json) {
    json out = json::array();
    for (const auto& t : reports) {
      json checks = json::array();
      for (const auto& r : t.checks)
        checks.push_back({{"name", r.name},
                          {"status", r.passed ? (r.skipped ? "skip" : "pass") : "fail"},
                          {"checked", r.checked},
                          {"detail", r.detail}});
      out.push_back({{"type", t.label}, {"passed", t.passed()}, {"checks", checks}});
    }
    std::cout << out.dump(2) << "\n";
    return ok ? kExitPass : kExitCheckFailed;
  }
  // Rows follow the first type's check order; every type runs the same list.
  std::size_t width = 5;
  for (const auto& r : reports.front().checks) width = std::max(width, r.name.size());
  std::ostringstream table;
  table << std::left;
  table.width(static_cast<std::streamsize>(width + 2));
  table << "check";
  for (const auto& t : reports) {
    table.width(6);
    table << t.label;
  }
  table << "\n";
  for (std::size_t i = 0; i < reports.front().checks.size(); ++i) {
    table.width(static_cast<std::streamsize>(width + 2));
    table << reports.front().checks[i].name;
    for (const auto& t : reports) {
      const auto& r = t.checks[i];
      table.width(6);
      table << (r.passed ? (r.skipped ? "skip" : "pass") : "FAIL");
    }
    table << "\n";
  }
  std::cout << table.str();
  for (const auto& t : reports)
    for (const auto& r : t.checks)
      if (!r.passed) std::cout << t.label << " " << r.name << ": " << r.detail << "\n";
  std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  return ok ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gmult: graded multiplicities in the exterior algebra via Cherednik operators"};
  app.require_subcommand(1);
  RunConfig c;
  app.add_option("--max-weyl-order", c.max_weyl_order, "cap on |W| (GMULT_MAX_WEYL_ORDER)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-k", c.max_k, "cap on k for kernels (GMULT_MAX_K)")->check(CLI::PositiveNumber);
  app.add_option("--max-kernel-terms", c.max_kernel_terms, "cap on kernel size (GMULT_MAX_KERNEL_TERMS)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--allow-slow", c.allow_slow, "allow E6 exterior-algebra runs (GMULT_ALLOW_SLOW)");

  auto type_opt = [&](CLI::App* sub) {
    sub->add_option("--type,-t", c.type_label, "Cartan type, e.g. B3")->required();
  };

  auto* roots = app.add_subcommand("roots", "root system data");
  type_opt(roots);
  roots->add_flag("--json", c.json);

  auto* weyl_cmd = app.add_subcommand("weyl", "symmetric reduced word of s_theta and its chain");
  type_opt(weyl_cmd);
  bool s_theta = false;
  weyl_cmd->add_flag("--s-theta", s_theta)->required();
  weyl_cmd->add_flag("--json", c.json);

  auto* hecke_cmd = app.add_subcommand("hecke", "apply Hecke operators");
  type_opt(hecke_cmd);
  std::string apply, to, check;
  hecke_cmd->add_option("--apply", apply, "Y_theta_dual, Y_minus_theta_dual, T<i>, T<i>^-1");
  hecke_cmd->add_option("--to", to, "element, e.g. \"e[0,1] - 2*e[0,0]\"");
  hecke_cmd->add_option("--check", check, "proposition");
  hecke_cmd->add_flag("--json", c.json);

  auto* scalar_cmd = app.add_subcommand("scalar", "Cherednik scalar product");
  type_opt(scalar_cmd);
  std::string ratio, what;
  scalar_cmd->add_option("-k", c.k, "t = q^(-k/2)")->check(CLI::NonNegativeNumber);
  scalar_cmd->add_option("--ratio", ratio, "print (f,1)/(1,1)");
  scalar_cmd->add_option("--verify", what, "theorem2|corollary|unitarity|convexity|symmetry");
  scalar_cmd->add_option("--seed", c.seed);
  scalar_cmd->add_option("--bound", c.sample_bound)->check(CLI::PositiveNumber);
  scalar_cmd->add_option("--pairs", c.pairs)->check(CLI::PositiveNumber);
  scalar_cmd->add_flag("--json", c.json);

  auto* mac = app.add_subcommand("macdonald", "Macdonald polynomial at t = q^(-k/2)");
  type_opt(mac);
  mac->add_option("-k", c.k)->required()->check(CLI::NonNegativeNumber);
  mac->add_option("--lambda", c.lambda, "dominant weight, e.g. 1,0")->required();
  mac->add_flag("--json", c.json);

  auto* gm = app.add_subcommand("gm", "graded multiplicities in the exterior algebra");
  type_opt(gm);
  gm->add_option("--lambda", c.lambda, "zero|theta|theta-s|all")
      ->check(CLI::IsMember({"zero", "theta", "theta-s", "all"}));
  gm->add_option("--method", c.method, "oracle|macdonald|formula|cross-check")
      ->check(CLI::IsMember({"oracle", "macdonald", "formula", "cross-check"}));
  auto* gm_json = gm->add_flag("--json", c.json);
  gm->add_flag("--latex", c.latex)->excludes(gm_json);

  auto* ver = app.add_subcommand("verify", "run the verification suite");
  bool all = false;
  ver->add_flag("--all", all, "run every check")->required();
  ver->add_option("--types", c.types, "comma separated Cartan types")->delimiter(',')->required();
  ver->add_option("--seed", c.seed);
  ver->add_option("--bound", c.sample_bound)->check(CLI::PositiveNumber);
  ver->add_option("--pairs", c.pairs)->check(CLI::PositiveNumber);
  ver->add_option("--threads", c.threads);
  ver->add_flag("--json", c.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  export_budgets(c);
  try {
    if (*roots) return cmd_roots(c);
    if (*weyl_cmd) return cmd_weyl(c);
    if (*hecke_cmd) return cmd_hecke(c, apply, to, check);
    if (*scalar_cmd) return cmd_scalar(c, ratio, what);
    if (*mac) return cmd_macdonald(c);
    if (*gm) return cmd_gm(c);
    if (*ver) return cmd_verify(c);
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
