#include "critinf/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace critinf {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
  deg_ = 0;
  for (int x : e_) {
    if (x < 0) throw Error("negative exponent");
    deg_ += x;
  }
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  r.deg_ += o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    r.e_[i] -= o.e_[i];
    if (r.e_[i] < 0) throw Error("monomial division not exact");
  }
  r.deg_ -= o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  r.deg_ = 0;
  for (std::size_t i = 0; i < r.e_.size(); ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

Monomial Monomial::with_exp(std::size_t i, int v) const {
  Monomial r = *this;
  r.deg_ += v - r.e_[i];
  r.e_[i] = v;
  return r;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> first_block,
                                   std::size_t nvars) {
  std::sort(first_block.begin(), first_block.end());
  std::vector<std::size_t> rest;
  std::size_t j = 0;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (j < first_block.size() && first_block[j] == i) { ++j; continue; }
    rest.push_back(i);
  }
  if (j != first_block.size()) throw Error("block indices out of range");
  return MonomialOrder(Kind::Block, std::move(first_block), std::move(rest));
}

namespace {

// Degrevlex on a subset of positions: higher total degree wins; among equal
// degrees the monomial with the smaller exponent in the last position wins.
int drl_on(const Monomial& a, const Monomial& b, const std::vector<std::size_t>* idx) {
  int da = 0, db = 0;
  if (idx) {
    for (std::size_t i : *idx) { da += a.exp(i); db += b.exp(i); }
  } else {
    da = a.deg(); db = b.deg();
  }
  if (da != db) return da < db ? -1 : 1;
  if (idx) {
    for (std::size_t k = idx->size(); k-- > 0;) {
      std::size_t i = (*idx)[k];
      if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
    }
  } else {
    for (std::size_t i = a.nvars(); i-- > 0;)
      if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::DegRevLex:
      return drl_on(a, b, nullptr);
    case Kind::Lex:
      for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
      return 0;
    case Kind::Block: {
      int c = drl_on(a, b, &first_);
      if (c) return c;
      return drl_on(a, b, &rest_);
    }
  }
  throw Error("unreachable");
}

}  // namespace critinf
