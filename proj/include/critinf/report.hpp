#ifndef CRITINF_REPORT_HPP
#define CRITINF_REPORT_HPP

#include <string>

#include "critinf/family.hpp"

namespace critinf {

/// Paper-style display form of a univariate report polynomial: denominators
/// cleared, integer content removed, positive leading coefficient, bare
/// exponents ("3t2+16t", "t+(s2+1)").
std::string display_poly(const Polynomial& p);

/// The same normalization in the machine grammar ("3*t^2+16*t",
/// "(s^2+1)*t"); reparsable.
std::string machine_poly(const Polynomial& p);

/// Input echo carried into the JSON reports.
struct JobEcho {
  std::string command;
  std::vector<std::string> vars;
  std::string param;    // empty when the field is plain Q
  std::string minpoly;  // empty unless an extension was requested
  std::string poly;     // input text as given
  std::size_t chart = 0;
};

std::string format_crit_text(const CritReport& r);
std::string format_crit_json(const CritReport& r, const JobEcho& echo);
std::string format_parcrit_text(const ParCritReport& r);
std::string format_parcrit_json(const ParCritReport& r, const JobEcho& echo);

}  // namespace critinf

#endif
