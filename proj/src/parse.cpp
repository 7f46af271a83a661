#include "critinf/parse.hpp"

#include <cctype>

namespace critinf {

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("trailing input", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Polynomial expr() {
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (eat('^')) {
      std::size_t at = pos_;
      std::string n = digits();
      if (n.empty()) throw ParseError("expected exponent", at);
      unsigned long e = std::stoul(n);
      if (e > 10000) throw ParseError("exponent too large", at);
      return b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Polynomial rational() {
    std::string num = digits();
    if (eat('/')) {
      std::size_t at = pos_;
      std::string den = digits();
      if (den.empty()) throw ParseError("expected denominator", at);
      if (Rational::from_string(den).is_zero()) throw ParseError("zero denominator", at);
      return Polynomial::constant(ring_, Rational::from_string(num + "/" + den));
    }
    return Polynomial::constant(ring_, Rational::from_string(num));
  }

  Polynomial identifier() {
    std::size_t at = pos_;
    std::string name;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      name += s_[pos_++];
    std::size_t idx = ring_->index_of(name);
    if (idx != RingSpec::npos) return Polynomial::variable(ring_, idx);
    const auto& F = *ring_->field();
    if (F.has_param() && F.param() == name)
      return Polynomial::constant(ring_, F.generator());
    throw UnknownVariable(name, at);
  }

  std::string digits() {
    skip_ws();
    std::string out;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      out += s_[pos_++];
    return out;
  }

  const std::string& s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

QPoly parse_qpoly(const std::string& text, const std::string& param) {
  RingPtr r = RingSpec::make(FieldSpec::rationals(), {param});
  Polynomial p = parse_poly(text, r);
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(0, p.degree_in(0))) + 1,
                               Rational(0));
  for (const auto& [m, c] : p.terms())
    coeffs[static_cast<std::size_t>(m.exp(0))] = std::get<Rational>(c);
  return QPoly(std::move(coeffs));
}

}  // namespace critinf
