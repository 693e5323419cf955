// padic: solve monomial equations x^k = a over Q_p, their Lipschitz
// perturbations, constrained polynomials, and Bethe-Potts fixed points;
// every answer carries exact digits and can be cross-checked against the
// brute-force oracle subcommands.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "padic/fixed_point.hpp"
#include "padic/oracle.hpp"
#include "padic/residue.hpp"
#include "padic/solvers.hpp"
#include "padic/textio.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace padic;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoSolution = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitBudget = 4;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::HypothesisViolated:
    case ErrorCode::ConditionIIFailed:
    case ErrorCode::SeedTooCoarse:
    case ErrorCode::EpsilonTooLarge:
    case ErrorCode::LipschitzTooLoose:
    case ErrorCode::LipschitzViolated:
    case ErrorCode::NotPrincipalDomain:
    case ErrorCode::PoleAtFixedPoint:
      return kExitHypothesis;
    case ErrorCode::BudgetExceeded:
      return kExitBudget;
    default:
      return kExitUsage;
  }
}

json root_to_json(const solve::RootEntry& e) {
  json digits = json::array();
  for (auto d : e.root.unit_digits()) digits.push_back(d);
  return json{{"xi", e.xi},
              {"valuation", e.root.is_zero() ? 0 : e.root.valuation()},
              {"digits", digits}};
}

json point_to_json(const PadicNumber& x) {
  json digits = json::array();
  for (auto d : x.unit_digits()) digits.push_back(d);
  return json{{"valuation", x.is_zero() ? 0 : x.valuation()},
              {"digits", digits}};
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int report_exit(const solve::SolutionReport& rep) {
  return rep.solvable() ? kExitOk : kExitNoSolution;
}

std::uint32_t s_of(std::uint64_t k, Prime p) {
  return residue::decompose_k(k, p).s;
}

void print_report_plain(const solve::SolutionReport& rep) {
  std::cout << "problem: " << rep.problem << " over Q_" << rep.p << "\n";
  std::cout << "verdict: " << to_string(rep.verdict) << "\n";
  if (!rep.solvable()) {
    std::cout << "reason: " << to_string(rep.reason) << "\n";
    return;
  }
  std::cout << "kappa_p: " << rep.kappa_p << "\n";
  for (const auto& e : rep.roots)
    std::cout << "root xi=" << e.xi << ": " << format_padic(e.root) << "\n";
}

json report_to_json(const solve::SolutionReport& rep,
                    const std::string& a_echo) {
  json j{{"p", rep.p}, {"k", rep.k}, {"a", a_echo},
         {"verdict", to_string(rep.verdict)}};
  if (!rep.solvable()) j["reason"] = to_string(rep.reason);
  j["kappa_p"] = rep.kappa_p;
  json roots = json::array();
  for (const auto& e : rep.roots) roots.push_back(root_to_json(e));
  j["roots"] = roots;
  return j;
}

// --expr grammar: monic monomial minus/plus a constant, "x^K-C" (or "x-C").
oracle::IntPolynomial parse_expr(const std::string& expr,
                                 std::uint64_t& k_out) {
  std::string s;
  for (char c : expr)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty() || s[0] != 'x')
    throw Error(ErrorCode::ParseError, "--expr must start with 'x'");
  std::size_t pos = 1;
  std::uint64_t k = 1;
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (start == pos)
      throw Error(ErrorCode::ParseError, "missing exponent after '^'");
    k = std::stoull(s.substr(start, pos - start));
    if (k == 0) throw Error(ErrorCode::ParseError, "exponent must be >= 1");
  }
  if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-'))
    throw Error(ErrorCode::ParseError, "expected '+C' or '-C' constant");
  long long c = 0;
  try {
    c = std::stoll(s.substr(pos));
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad constant in --expr");
  }
  oracle::IntPolynomial F(static_cast<std::size_t>(k) + 1, 0);
  F[0] = c;
  F[static_cast<std::size_t>(k)] = 1;
  k_out = k;
  return F;
}

std::vector<long long> parse_int_list(const std::string& text) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad integer '" + tok + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty list");
  return out;
}

struct CheckArgs {
  std::uint64_t p = 0, k = 0;
  std::string a;
  bool json_out = false;
};

struct SolveRootArgs {
  std::uint64_t p = 0, k = 0;
  std::string a;
  std::int32_t N = 16;
  bool json_out = false;
};

struct SolvePolyArgs {
  std::uint64_t p = 0;
  std::string coeffs;
  std::int32_t N = 16;
  bool json_out = false;
};

struct FixedPointArgs {
  std::uint64_t p = 0, k = 0;
  std::string b, c, d;
  std::int32_t N = 16;
  bool json_out = false;
};

struct OracleCountArgs {
  std::uint64_t p = 0, k = 0;
  std::string expr, coeffs;
  std::int32_t M = 0;
  bool json_out = false;
};

struct OracleFixArgs {
  std::uint64_t p = 0, k = 0;
  long long b = 0, c = 0, d = 0;
  std::int32_t M = 0;
  bool json_out = false;
};

int run_check(const CheckArgs& a) {
  Prime p(a.p);
  std::uint32_t s = s_of(a.k, p);
  PadicNumber av =
      parse_padic(a.a, p, static_cast<std::int32_t>(2 * s) + 10);
  solve::SolvabilityCheck chk = solve::check_solvability(a.k, av);
  if (a.json_out) {
    json j{{"p", a.p},
           {"k", a.k},
           {"a", a.a},
           {"verdict", to_string(chk.verdict)}};
    if (chk.verdict != solve::Verdict::Solvable)
      j["reason"] = to_string(chk.reason);
    j["kappa_p"] = chk.kappa_p;
    emit(j);
  } else if (chk.verdict == solve::Verdict::Solvable) {
    std::cout << "verdict: Solvable\nkappa_p: " << chk.kappa_p << "\n";
  } else {
    std::cout << "verdict: NoSolution\nreason: " << to_string(chk.reason)
              << "\n";
  }
  return chk.verdict == solve::Verdict::Solvable ? kExitOk : kExitNoSolution;
}

int run_solve_root(const SolveRootArgs& a) {
  Prime p(a.p);
  std::uint32_t s = s_of(a.k, p);
  PadicNumber av =
      parse_padic(a.a, p, a.N + static_cast<std::int32_t>(2 * s) + 8);
  solve::SolutionReport rep = solve::solve_monomial(a.k, av, a.N);
  if (a.json_out)
    emit(report_to_json(rep, a.a));
  else
    print_report_plain(rep);
  return report_exit(rep);
}

int run_solve_poly(const SolvePolyArgs& a) {
  Prime p(a.p);
  // descending coefficients, each an integer or rational literal
  // (digit forms contain commas and cannot be list-embedded)
  std::vector<std::string> desc;
  {
    std::stringstream ss(a.coeffs);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.find('@') != std::string::npos)
        throw Error(ErrorCode::ParseError,
                    "digit-form coefficients are not supported in lists");
      desc.push_back(tok);
    }
  }
  if (desc.size() < 2)
    throw Error(ErrorCode::ParseError, "need degree >= 1");
  if (desc.front() != "1")
    throw Error(ErrorCode::NonMonic, "leading coefficient must be 1");
  std::uint64_t k = desc.size() - 1;
  std::uint32_t s = s_of(k, p);
  std::int32_t digits = a.N + static_cast<std::int32_t>(2 * s) + 10;
  std::vector<PadicNumber> asc;
  for (auto it = desc.rbegin(); it != desc.rend(); ++it)
    asc.push_back(parse_padic(*it, p, digits));
  solve::SolutionReport rep =
      solve::solve_polynomial(Polynomial(p, std::move(asc)), a.N);
  if (a.json_out) {
    json j{{"p", a.p}, {"k", k}, {"coeffs", desc},
           {"verdict", to_string(rep.verdict)}};
    if (!rep.solvable()) j["reason"] = to_string(rep.reason);
    j["kappa_p"] = rep.kappa_p;
    json roots = json::array();
    for (const auto& e : rep.roots) roots.push_back(root_to_json(e));
    j["roots"] = roots;
    emit(j);
  } else {
    print_report_plain(rep);
  }
  return report_exit(rep);
}

int run_fixed_points(const FixedPointArgs& a) {
  Prime p(a.p);
  std::int32_t digits = a.N + 64;
  PadicNumber b = parse_padic(a.b, p, digits);
  PadicNumber c = parse_padic(a.c, p, digits);
  PadicNumber d = parse_padic(a.d, p, digits);
  solve::FixedPointProblem prob(std::move(b), std::move(c), std::move(d),
                                a.k);
  if (!a.json_out) {
    std::cout << "hypothesis d = 1 - b + c: ok\n";
    std::cout << "hypothesis b, c, d in E_p: ok\n";
    std::cout << "hypothesis |b-1| < |(c-1)^2| < |k^2|: ok\n";
    std::cout << "hypothesis c != b*d: ok\n";
  }
  solve::FixedPointReport rep = solve::fixed_points(prob, a.N);
  if (a.json_out) {
    json j{{"p", a.p}, {"k", a.k}, {"b", a.b}, {"c", a.c}, {"d", a.d},
           {"kappa_p", rep.kappa_p}};
    json pts = json::array();
    for (const auto& x : rep.points) pts.push_back(point_to_json(x));
    j["fixed_points"] = pts;
    emit(j);
  } else {
    std::cout << "kappa_p: " << rep.kappa_p << "\n";
    std::cout << "fixed points (" << rep.points.size() << "):\n";
    for (const auto& x : rep.points)
      std::cout << "  " << format_padic(x) << "\n";
  }
  return kExitOk;
}

int run_oracle_count(const OracleCountArgs& a) {
  Prime p(a.p);
  std::uint64_t k = a.k;
  oracle::IntPolynomial F;
  if (!a.expr.empty()) {
    std::uint64_t k_expr = 0;
    F = parse_expr(a.expr, k_expr);
    if (k == 0) k = k_expr;
  } else if (!a.coeffs.empty()) {
    std::vector<long long> desc = parse_int_list(a.coeffs);
    F.assign(desc.rbegin(), desc.rend());
    if (k == 0) k = desc.size() - 1;
  } else {
    throw Error(ErrorCode::ParseError, "need --expr or --coeffs");
  }
  oracle::OracleCount res = oracle::brute_force_count(F, p, k, a.M);
  if (a.json_out) {
    json j{{"p", a.p},
           {"k", k},
           {"M", res.modulus_exponent},
           {"class_exponent", res.class_exponent},
           {"count", res.count},
           {"representatives", res.representatives}};
    emit(j);
  } else {
    std::cout << "classes mod p^" << res.class_exponent << ": " << res.count
              << "\n";
    std::cout << "representatives:";
    for (auto r : res.representatives) std::cout << " " << r;
    std::cout << "\n";
  }
  return kExitOk;
}

int run_oracle_fixed(const OracleFixArgs& a) {
  Prime p(a.p);
  oracle::OracleCount res =
      oracle::brute_force_fixed_points(a.b, a.c, a.d, a.k, p, a.M);
  if (a.json_out) {
    json j{{"p", a.p},
           {"k", a.k},
           {"b", a.b},
           {"c", a.c},
           {"d", a.d},
           {"M", res.modulus_exponent},
           {"class_exponent", res.class_exponent},
           {"count", res.count},
           {"representatives", res.representatives}};
    emit(j);
  } else {
    std::cout << "classes mod p^" << res.class_exponent << ": " << res.count
              << "\n";
    std::cout << "representatives:";
    for (auto r : res.representatives) std::cout << " " << r;
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact p-adic monomial, polynomial and fixed-point solver"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "solvability of x^k = a");
  check->add_option("-p", check_args.p, "odd prime")->required();
  check->add_option("-k", check_args.k, "exponent")->required();
  check->add_option("-a", check_args.a, "target (int, num/den, or digits@v)")
      ->required();
  check->add_flag("--json", check_args.json_out, "JSON output");

  SolveRootArgs root_args;
  auto* solve_root = app.add_subcommand("solve-root", "all roots of x^k = a");
  solve_root->add_option("-p", root_args.p)->required();
  solve_root->add_option("-k", root_args.k)->required();
  solve_root->add_option("-a", root_args.a)->required();
  solve_root->add_option("-N", root_args.N, "digits of output precision");
  solve_root->add_flag("--json", root_args.json_out);

  SolvePolyArgs poly_args;
  auto* solve_poly =
      app.add_subcommand("solve-poly", "roots of a monic constrained poly");
  solve_poly->add_option("-p", poly_args.p)->required();
  solve_poly->add_option("--coeffs", poly_args.coeffs,
                         "descending coefficients (int or num/den), monic")
      ->required();
  solve_poly->add_option("-N", poly_args.N);
  solve_poly->add_flag("--json", poly_args.json_out);

  FixedPointArgs fix_args;
  auto* fixed =
      app.add_subcommand("fixed-points", "fixed points of ((bx-c)/(x-d))^k");
  fixed->add_option("-p", fix_args.p)->required();
  fixed->add_option("-k", fix_args.k)->required();
  fixed->add_option("--b", fix_args.b)->required();
  fixed->add_option("--c", fix_args.c)->required();
  fixed->add_option("--d", fix_args.d)->required();
  fixed->add_option("-N", fix_args.N);
  fixed->add_flag("--json", fix_args.json_out);

  auto* orc = app.add_subcommand("oracle", "brute-force cross-checks");
  orc->require_subcommand(1);

  OracleCountArgs ocount_args;
  auto* ocount = orc->add_subcommand("count", "exhaustive root count mod p^M");
  ocount->add_option("-p", ocount_args.p)->required();
  ocount->add_option("-k", ocount_args.k, "exponent (for class merging)");
  ocount->add_option("--expr", ocount_args.expr, "x^K-C form");
  ocount->add_option("--coeffs", ocount_args.coeffs,
                     "descending integer coefficients");
  ocount->add_option("-M", ocount_args.M, "scan modulus exponent")
      ->required();
  ocount->add_flag("--json", ocount_args.json_out);

  OracleFixArgs ofix_args;
  auto* ofix =
      orc->add_subcommand("fixed-points", "exhaustive fixed-point count");
  ofix->add_option("-p", ofix_args.p)->required();
  ofix->add_option("-k", ofix_args.k)->required();
  ofix->add_option("--b", ofix_args.b)->required();
  ofix->add_option("--c", ofix_args.c)->required();
  ofix->add_option("--d", ofix_args.d)->required();
  ofix->add_option("-M", ofix_args.M)->required();
  ofix->add_flag("--json", ofix_args.json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return run_check(check_args);
    if (*solve_root) return run_solve_root(root_args);
    if (*solve_poly) return run_solve_poly(poly_args);
    if (*fixed) return run_fixed_points(fix_args);
    if (*ocount) return run_oracle_count(ocount_args);
    if (*ofix) return run_oracle_fixed(ofix_args);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
