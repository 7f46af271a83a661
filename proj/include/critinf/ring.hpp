#ifndef CRITINF_RING_HPP
#define CRITINF_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "critinf/field.hpp"
#include "critinf/monomial.hpp"

namespace critinf {

/// Coefficient field + ordered variable list + monomial order.
class RingSpec {
 public:
  static std::shared_ptr<const RingSpec> make(FieldPtr field,
                                              std::vector<std::string> vars,
                                              MonomialOrder order = MonomialOrder::degrevlex());

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::string& var(std::size_t i) const { return vars_[i]; }
  const MonomialOrder& order() const { return order_; }

  /// Index of a variable name, or npos when absent.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const std::string& name) const;

  std::shared_ptr<const RingSpec> with_order(MonomialOrder order) const;
  std::shared_ptr<const RingSpec> with_vars_appended(std::vector<std::string> extra) const;
  std::shared_ptr<const RingSpec> with_field(FieldPtr field) const;

  bool same_structure(const RingSpec& o) const;

 private:
  RingSpec(FieldPtr f, std::vector<std::string> v, MonomialOrder o)
      : field_(std::move(f)), vars_(std::move(v)), order_(std::move(o)) {}
  FieldPtr field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

/// A name based on `base` that collides with nothing in `taken`.
std::string fresh_name(const std::string& base, const std::vector<std::string>& taken);

}  // namespace critinf

#endif
