#include "critinf/report.hpp"

#include <json.hpp>

#include <sstream>

#include "critinf/upoly.hpp"

namespace critinf {

namespace {

using nlohmann::json;

// A univariate report polynomial with all denominators cleared: coefficient
// of X^i is a rational-coefficient polynomial in the field parameter (a
// constant over plain Q).
struct Cleared {
  std::string var;    // the report indeterminate
  std::string param;  // field parameter name ("" over Q)
  std::vector<QPoly> coeffs;
};

Cleared clear_poly(const Polynomial& p) {
  const auto& ring = *p.ring();
  const auto& F = *ring.field();
  std::size_t var = p.sole_variable().value_or(0);
  Cleared out{ring.var(var), F.has_param() ? F.param() : "", {}};
  UPoly u = UPoly::from_polynomial(p, var);
  if (u.is_zero()) return out;

  std::vector<QPoly> nums;
  std::vector<QPoly> dens;
  for (int i = 0; i <= u.degree(); ++i) {
    FieldElement c = u.coeff(i);
    switch (F.kind()) {
      case FieldKind::Rationals:
        nums.emplace_back(std::get<Rational>(c));
        dens.emplace_back(Rational(1));
        break;
      case FieldKind::RationalFunctions: {
        const RatFunc& rf = std::get<RatFunc>(c);
        nums.push_back(rf.num);
        dens.push_back(rf.den);
        break;
      }
      case FieldKind::AlgebraicExtension:
        nums.push_back(std::get<AlgElem>(c).residue);
        dens.emplace_back(Rational(1));
        break;
    }
  }
  QPoly den_lcm(Rational(1));
  for (const auto& d : dens)
    if (!d.is_zero())
      den_lcm = QPoly::div_exact(den_lcm * d, QPoly::gcd(den_lcm, d));
  for (std::size_t i = 0; i < nums.size(); ++i)
    nums[i] = nums[i] * QPoly::div_exact(den_lcm, dens[i]);

  // clear rational denominators and the integer content across everything
  mpz_class lcm_all = 1, gcd_all = 0;
  for (const auto& q : nums)
    for (const auto& r : q.coeffs()) lcm_all = lcm(lcm_all, r.den());
  for (const auto& q : nums)
    for (const auto& r : q.coeffs())
      gcd_all = gcd(gcd_all, mpz_class(r.num() * (lcm_all / r.den())));
  if (gcd_all == 0) gcd_all = 1;
  Rational scale(mpq_class(lcm_all, gcd_all));
  for (auto& q : nums) q = q.scale(scale);

  // positive leading coefficient (of the leading parameter polynomial)
  if (nums.back().lc().sign() < 0)
    for (auto& q : nums) q = -q;
  out.coeffs = std::move(nums);
  return out;
}

std::string fmt_power(const std::string& var, int e, bool machine) {
  if (e == 0) return "";
  std::string s = var;
  if (e > 1) s += machine ? ("^" + std::to_string(e)) : std::to_string(e);
  return s;
}

// "s2+1" (display) or "s^2+1" (machine); integer coefficients.
std::string fmt_qpoly(const QPoly& q, const std::string& param, bool machine) {
  std::string out;
  for (int i = q.degree(); i >= 0; --i) {
    Rational c = q.coeff(i);
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Rational a = neg ? -c : c;
    std::string coef = a.str();
    std::string pow = fmt_power(param, i, machine);
    std::string term;
    if (pow.empty()) term = coef;
    else if (a.is_one()) term = pow;
    else term = machine ? (coef + "*" + pow) : (coef + pow);
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? "-" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

std::string fmt_cleared(const Cleared& c, bool machine) {
  if (c.coeffs.empty()) return "0";
  std::string out;
  for (int i = static_cast<int>(c.coeffs.size()) - 1; i >= 0; --i) {
    const QPoly& q = c.coeffs[static_cast<std::size_t>(i)];
    if (q.is_zero()) continue;
    std::string pow = fmt_power(c.var, i, machine);
    std::string term;
    bool neg = false;
    if (q.is_constant()) {
      Rational a = q.coeff(0);
      neg = a.sign() < 0;
      if (neg) a = -a;
      if (pow.empty()) term = a.str();
      else if (a.is_one()) term = pow;
      else term = machine ? (a.str() + "*" + pow) : (a.str() + pow);
    } else {
      QPoly qq = q;
      neg = q.lc().sign() < 0;
      if (neg) qq = -q;
      std::string inner = "(" + fmt_qpoly(qq, c.param, machine) + ")";
      if (pow.empty()) term = inner;
      else term = machine ? (inner + "*" + pow) : (inner + pow);
    }
    if (out.empty()) out = (neg ? "-" : "") + term;
    else out += (neg ? "-" : "+") + term;
  }
  return out.empty() ? "0" : out;
}

std::string table_row(const std::string& a, std::size_t value, std::size_t width) {
  std::string row = "  " + a;
  std::size_t pad = (a.size() + 3 <= width) ? width - a.size() : 3;
  row.append(pad, ' ');
  row += std::to_string(value);
  return row;
}

std::size_t table_width(const std::vector<std::pair<std::string, std::size_t>>& rows) {
  std::size_t w = 8;
  for (const auto& [name, v] : rows) w = std::max(w, name.size() + 3);
  return w;
}

}  // namespace

std::string display_poly(const Polynomial& p) { return fmt_cleared(clear_poly(p), false); }
std::string machine_poly(const Polynomial& p) { return fmt_cleared(clear_poly(p), true); }

std::string format_crit_text(const CritReport& r) {
  std::ostringstream os;
  os << "Affine critical values are the roots of " << display_poly(r.affine.baff) << "\n";
  os << "Affine Milnor number : " << r.affine.mu << "\n";
  os << "Critical values at infinity are the roots of " << display_poly(r.infinity.binf)
     << "\n";
  os << "Milnor number at infinity : " << r.infinity.lambda << "\n";
  if (!r.infinity.details.empty()) {
    os << "Details of critical values at infinity :\n";
    std::vector<std::pair<std::string, std::size_t>> rows;
    for (const auto& d : r.infinity.details)
      rows.emplace_back(display_poly(d.factor), d.value);
    std::size_t w = table_width(rows);
    for (const auto& [name, v] : rows) os << table_row(name, v, w) << "\n";
  }
  if (!r.affine.details.empty()) {
    os << "Details of affine critical values :\n";
    std::vector<std::pair<std::string, std::size_t>> rows;
    for (const auto& d : r.affine.details)
      rows.emplace_back(display_poly(d.factor), d.value);
    std::size_t w = table_width(rows);
    for (const auto& [name, v] : rows) os << table_row(name, v, w) << "\n";
  }
  os << "Milnor multi-integer : (" << r.multi.mu << "," << r.multi.card_baff << ","
     << r.multi.lambda << "," << r.multi.card_binf << "," << r.multi.card_b << ")\n";
  os << "Sphere counts :\n";
  {
    std::vector<std::pair<std::string, std::size_t>> rows;
    for (const auto& s : r.spheres) rows.emplace_back(display_poly(s.factor), s.count);
    rows.emplace_back("generic", r.generic_spheres);
    std::size_t w = table_width(rows);
    for (const auto& [name, v] : rows) os << table_row(name, v, w) << "\n";
  }
  if (!r.strong_infinity_isolated)
    os << "Note : the strong isolatedness condition at infinity fails.\n";
  if (r.infinity.coverage_warning)
    os << "Warning : chart fallback was needed; values verified in chart "
       << r.infinity.chart << ".\n";
  if (r.generic_change_seed)
    os << "Generic linear change applied with seed " << *r.generic_change_seed << ".\n";
  return os.str();
}

namespace {

json poly_json(const Polynomial& p) {
  return json{{"roots_of", machine_poly(p)}, {"display", display_poly(p)}};
}

json details_json(const std::vector<FactorDetail>& details) {
  json a = json::array();
  for (const auto& d : details)
    a.push_back(json{{"factor", machine_poly(d.factor)},
                     {"factor_display", display_poly(d.factor)},
                     {"value", d.value}});
  return a;
}

json echo_json(const JobEcho& echo) {
  json in{{"command", echo.command},
          {"vars", echo.vars},
          {"poly", echo.poly}};
  in["param"] = echo.param.empty() ? json(nullptr) : json(echo.param);
  in["minpoly"] = echo.minpoly.empty() ? json(nullptr) : json(echo.minpoly);
  if (echo.chart) in["chart"] = echo.chart;
  return in;
}

}  // namespace

std::string format_crit_json(const CritReport& r, const JobEcho& echo) {
  json j;
  j["input"] = echo_json(echo);
  j["input"]["analyzed"] = r.input;
  j["hypotheses"] = json{{"affine_isolated", r.affine_isolated},
                         {"infinity_isolated", r.infinity_isolated},
                         {"strong_infinity_isolated", r.strong_infinity_isolated}};
  j["affine"] = poly_json(r.affine.baff);
  j["affine"]["mu"] = r.affine.mu;
  j["affine"]["details"] = details_json(r.affine.details);
  j["infinity"] = poly_json(r.infinity.binf);
  j["infinity"]["lambda"] = r.infinity.lambda;
  j["infinity"]["details"] = details_json(r.infinity.details);
  j["infinity"]["chart"] = r.infinity.chart;
  j["infinity"]["coverage_warning"] = r.infinity.coverage_warning;
  j["multi_integer"] = json::array({r.multi.mu, r.multi.card_baff, r.multi.lambda,
                                    r.multi.card_binf, r.multi.card_b});
  json spheres = json::array();
  for (const auto& s : r.spheres)
    spheres.push_back(json{{"factor", machine_poly(s.factor)},
                           {"factor_display", display_poly(s.factor)},
                           {"count", s.count}});
  j["sphere_counts"] = spheres;
  j["generic_spheres"] = r.generic_spheres;
  j["generic_change_seed"] =
      r.generic_change_seed ? json(*r.generic_change_seed) : json(nullptr);
  return j.dump(2) + "\n";
}

std::string format_parcrit_text(const ParCritReport& r) {
  std::ostringstream os;
  os << "Critical parameters are included in the roots of " << display_poly(r.sprime)
     << "\n";
  os << "Components :\n";
  std::vector<std::pair<std::string, const Polynomial*>> comps = {
      {"affine escape", &r.affine_escape}, {"#Baff jump", &r.baff_jump},
      {"Binf jump", &r.binf_jump},         {"lambda jump", &r.lambda_jump},
      {"#B jump", &r.cardb_jump},          {"degree drop", &r.degree_drop}};
  std::size_t w = 16;
  for (const auto& [name, p] : comps)
    os << "  " << name << std::string(w - name.size(), ' ') << display_poly(*p) << "\n";
  if (!r.degree_constant)
    os << "Warning : the degree drops on the roots of " << display_poly(r.degree_drop)
       << "; the triviality criterion needs constant degree.\n";
  if (r.milnor_constant && r.degree_constant) {
    if (r.nvars != 3)
      os << "The Milnor data is constant: all members of the family are "
            "topologically equivalent (n = " << r.nvars << ").\n";
    else
      os << "The Milnor data is constant; topological triviality is only "
            "guaranteed for n != 3.\n";
  }
  return os.str();
}

std::string format_parcrit_json(const ParCritReport& r, const JobEcho& echo) {
  json j;
  j["input"] = echo_json(echo);
  j["input"]["analyzed"] = r.input;
  j["sprime_roots_of"] = machine_poly(r.sprime);
  j["sprime_display"] = display_poly(r.sprime);
  j["components"] = json{{"affine_escape", machine_poly(r.affine_escape)},
                         {"baff_jump", machine_poly(r.baff_jump)},
                         {"binf_jump", machine_poly(r.binf_jump)},
                         {"lambda_jump", machine_poly(r.lambda_jump)},
                         {"cardb_jump", machine_poly(r.cardb_jump)},
                         {"degree_drop", machine_poly(r.degree_drop)}};
  j["degree_constant"] = r.degree_constant;
  j["milnor_constant"] = r.milnor_constant;
  j["trivial_for_n_not_3"] = r.milnor_constant && r.degree_constant && r.nvars != 3;
  return j.dump(2) + "\n";
}

}  // namespace critinf
