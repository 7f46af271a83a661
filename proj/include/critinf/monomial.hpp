#ifndef CRITINF_MONOMIAL_HPP
#define CRITINF_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "critinf/errors.hpp"

namespace critinf {

/// Exponent vector of fixed length (the ring's variable count).
class Monomial {
 public:
  explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<int> exps);

  std::size_t nvars() const { return e_.size(); }
  int exp(std::size_t i) const { return e_[i]; }
  int deg() const { return deg_; }
  bool is_one() const { return deg_ == 0; }
  const std::vector<int>& exps() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial divide_by(const Monomial& o) const;  // this / o, o must divide
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime(const Monomial& o) const;

  Monomial with_exp(std::size_t i, int v) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }
  /// Canonical storage order (plain lexicographic on exponents); unrelated
  /// to any monomial order.
  bool operator<(const Monomial& o) const { return e_ < o.e_; }

 private:
  std::vector<int> e_;
  int deg_;
};

/// Global monomial order: degrevlex, lex, or a two-block order whose leading
/// block dominates (both blocks compared degrevlex) — the shape elimination
/// needs.
class MonomialOrder {
 public:
  enum class Kind { DegRevLex, Lex, Block };

  static MonomialOrder degrevlex() { return MonomialOrder(Kind::DegRevLex, {}, {}); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, {}, {}); }
  static MonomialOrder block(std::vector<std::size_t> first_block, std::size_t nvars);

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& first_block() const { return first_; }

  /// Three-way compare: negative if a < b, zero iff equal, positive if a > b.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

  bool operator==(const MonomialOrder& o) const {
    return kind_ == o.kind_ && first_ == o.first_;
  }

 private:
  MonomialOrder(Kind k, std::vector<std::size_t> fb, std::vector<std::size_t> rb)
      : kind_(k), first_(std::move(fb)), rest_(std::move(rb)) {}
  Kind kind_;
  std::vector<std::size_t> first_;  // for Block: indices of the leading block
  std::vector<std::size_t> rest_;   // complementary indices, precomputed
};

}  // namespace critinf

#endif
