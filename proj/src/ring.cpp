#include "critinf/ring.hpp"

#include <algorithm>
#include <set>

namespace critinf {

RingPtr RingSpec::make(FieldPtr field, std::vector<std::string> vars, MonomialOrder order) {
  if (!field) throw Error("ring needs a field");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw Error("empty variable name");
    if (!seen.insert(v).second) throw Error("duplicate variable '" + v + "'");
    if (field->has_param() && v == field->param())
      throw Error("variable '" + v + "' collides with the field parameter");
  }
  return RingPtr(new RingSpec(std::move(field), std::move(vars), std::move(order)));
}

std::size_t RingSpec::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return npos;
}

RingPtr RingSpec::with_order(MonomialOrder order) const {
  return RingPtr(new RingSpec(field_, vars_, std::move(order)));
}

RingPtr RingSpec::with_vars_appended(std::vector<std::string> extra) const {
  std::vector<std::string> v = vars_;
  v.insert(v.end(), extra.begin(), extra.end());
  return make(field_, std::move(v), order_);
}

RingPtr RingSpec::with_field(FieldPtr field) const {
  return make(std::move(field), vars_, order_);
}

bool RingSpec::same_structure(const RingSpec& o) const {
  return vars_ == o.vars_ && *field_ == *o.field_;
}

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
  auto used = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  if (!used(base)) return base;
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!used(cand)) return cand;
  }
}

}  // namespace critinf
