#include <CLI11.hpp>

#include <iostream>

#include "critinf/parse.hpp"
#include "critinf/report.hpp"

using namespace critinf;

namespace {

std::vector<std::string> split_vars(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : csv) {
    if (ch == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct CritArgs {
  std::string vars, param, minpoly, poly;
  std::size_t chart = 0;
  std::uint64_t seed = 0;
  bool has_seed = false;
  bool json = false;
};

int run_crit(const CritArgs& a) {
  std::vector<std::string> vars = split_vars(a.vars);
  FieldPtr K = FieldSpec::rationals();
  if (!a.param.empty()) {
    if (!a.minpoly.empty())
      K = FieldSpec::algebraic_extension(a.param, parse_qpoly(a.minpoly, a.param));
    else
      K = FieldSpec::rational_functions(a.param);
  } else if (!a.minpoly.empty()) {
    throw Error("--minpoly needs --param");
  }
  RingPtr ring = RingSpec::make(K, vars);
  Polynomial f = parse_poly(a.poly, ring);
  CritOptions opts;
  opts.chart = a.chart;
  if (a.has_seed) opts.generic_change_seed = a.seed;
  CritReport rep = analyze(f, opts);
  if (a.json) {
    JobEcho echo{"crit", vars, a.param, a.minpoly, a.poly, a.chart};
    std::cout << format_crit_json(rep, echo);
  } else {
    std::cout << format_crit_text(rep);
  }
  return 0;
}

struct ParArgs {
  std::string vars, param, poly;
  bool json = false;
};

int run_parcrit(const ParArgs& a) {
  std::vector<std::string> vars = split_vars(a.vars);
  if (a.param.empty()) throw Error("parcrit needs --family-param");
  vars.push_back(a.param);
  RingPtr ring = RingSpec::make(FieldSpec::rationals(), vars);
  Polynomial f = parse_poly(a.poly, ring);
  ParCritReport rep = par_crit(FamilySpec::make(f, a.param));
  if (a.json) {
    JobEcho echo{"parcrit", split_vars(a.vars), a.param, "", a.poly, 0};
    std::cout << format_parcrit_json(rep, echo);
  } else {
    std::cout << format_parcrit_text(rep);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"critinf: critical values and Milnor numbers of polynomial maps, "
               "in the affine plane and at infinity"};
  app.require_subcommand(1);

  CritArgs ca;
  CLI::App* crit = app.add_subcommand(
      "crit", "affine and at-infinity critical data of one polynomial");
  crit->add_option("--vars", ca.vars, "comma-separated ring variables")->required();
  crit->add_option("--param", ca.param, "field parameter name (coefficients in Q(s))");
  crit->add_option("--minpoly", ca.minpoly,
                   "minimal polynomial of the parameter (with --param)");
  crit->add_option("--chart", ca.chart, "chart index for the lambda computation (1..n)");
  CLI::Option* seed_opt = crit->add_option(
      "--generic-change", ca.seed, "seeded unimodular linear change of coordinates");
  crit->add_flag("--json", ca.json, "machine-readable output");
  crit->add_option("poly", ca.poly, "polynomial expression")->required();

  ParArgs pa;
  CLI::App* par = app.add_subcommand(
      "parcrit", "candidate critical parameters of a one-parameter family");
  par->add_option("--vars", pa.vars, "comma-separated affine variables")->required();
  par->add_option("--family-param", pa.param, "name of the family parameter")->required();
  par->add_flag("--json", pa.json, "machine-readable output");
  par->add_option("poly", pa.poly, "polynomial expression")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (crit->parsed()) {
      ca.has_seed = seed_opt->count() > 0;
      return run_crit(ca);
    }
    return run_parcrit(pa);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const HypothesisViolation& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return 2;
  } catch (const ZeroDivisorError& e) {
    std::cerr << "error: the minimal polynomial is reducible (a factor was "
                 "detected); rerun with an irreducible factor\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
