#include "sqf/scalar.hpp"

#include <cctype>
#include <ostream>

#include "sqf/errors.hpp"

namespace sqf {

const std::array<std::string, kNumParams>& param_names() {
  static const std::array<std::string, kNumParams> names = {"p", "q", "lambda", "gamma", "mu", "nu", "delta"};
  return names;
}

int param_index(std::string_view name) {
  const auto& n = param_names();
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] == name) return static_cast<int>(i);
  return -1;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("bad rational literal '" + std::string(text) + "'");
  if (sgn(r.get_den()) == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

Scalar::Scalar(const Rational& r) : num_(MultiPoly::constant(r, kNumParams)), den_(MultiPoly::constant(1, kNumParams)) {}

Scalar::Scalar(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("zero denominator");
  canonicalize();
}

Scalar Scalar::param(std::string_view name) {
  int i = param_index(name);
  if (i < 0) throw ParseError("unknown parameter '" + std::string(name) + "'");
  return param(static_cast<std::size_t>(i));
}

Scalar Scalar::param(std::size_t index) {
  Scalar s;
  s.num_ = MultiPoly::variable(index, kNumParams);
  return s;
}

void Scalar::canonicalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1, kNumParams);
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw PreconditionViolated("scalar '" + str() + "' is not a constant");
  return num_.constant_value() / den_.constant_value();
}

unsigned Scalar::occurring() const {
  unsigned mask = 0;
  for (const auto* poly : {&num_, &den_})
    for (const auto& [e, c] : poly->terms())
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) mask |= 1u << i;
  return mask;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) canonicalize();
    else if (num_.is_zero()) den_ = MultiPoly::constant(1, kNumParams);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ = num_ * o.num_;
  if (num_.is_zero()) {
    den_ = MultiPoly::constant(1, kNumParams);
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) return *this;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("division by the zero scalar");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  canonicalize();
  return *this;
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return Scalar(1) / pow(-k);
  Scalar r;
  r.num_ = num_.pow(static_cast<unsigned>(k));
  r.den_ = den_.pow(static_cast<unsigned>(k));
  r.canonicalize();
  return r;
}

namespace {

std::vector<std::optional<Rational>> values_of(const Assignment& at) {
  std::vector<std::optional<Rational>> v(kNumParams);
  for (const auto& [name, val] : at) {
    int i = param_index(name);
    if (i >= 0) v[i] = val;
  }
  return v;
}

}  // namespace

Rational Scalar::evaluate(const Assignment& at) const {
  auto v = values_of(at);
  std::size_t which = 0;
  try {
    Rational d = den_.evaluate(v, &which);
    if (sqf::is_zero(d)) throw PoleAtSamplePoint("denominator of '" + str() + "' vanishes at the sample point");
    return num_.evaluate(v, &which) / d;
  } catch (const UnboundParameter&) {
    throw UnboundParameter("parameter '" + param_names()[which] + "' is not assigned");
  }
}

Scalar Scalar::substitute(const std::map<std::size_t, Scalar>& subs) const {
  auto sub_poly = [&](const MultiPoly& poly) {
    Scalar acc;
    for (const auto& [e, c] : poly.terms()) {
      Scalar t(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        auto it = subs.find(i);
        t *= (it == subs.end() ? param(i) : it->second).pow(e[i]);
      }
      acc += t;
    }
    return acc;
  };
  if (den_.is_one()) return sub_poly(num_);
  Scalar d = sub_poly(den_);
  if (d.is_zero()) throw PoleAtSamplePoint("denominator of '" + str() + "' vanishes under substitution");
  return sub_poly(num_) / d;
}

Scalar Scalar::substitute(const Assignment& at) const {
  std::map<std::size_t, Scalar> subs;
  for (const auto& [name, val] : at) {
    int i = param_index(name);
    if (i >= 0) subs.emplace(static_cast<std::size_t>(i), Scalar(val));
  }
  return substitute(subs);
}

std::string Scalar::str() const {
  std::vector<std::string> names(param_names().begin(), param_names().end());
  std::string n = num_.to_string(names);
  if (den_.is_one()) return n;
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string(names);
  if (den_.terms().size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar scalar_arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::kAdd: return a + b;
    case ArithOp::kSub: return a - b;
    case ArithOp::kMul: return a * b;
    case ArithOp::kDiv: return a / b;
  }
  return a;
}

Rational evaluate(const Scalar& s, const Assignment& at) { return s.evaluate(at); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view t) : t_(t) {}

  Scalar parse() {
    skip();
    if (pos_ >= t_.size()) fail("empty expression");
    Scalar s = expr();
    skip();
    if (pos_ != t_.size()) fail("unexpected trailing input");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(t_) + "'");
  }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < t_.size() && t_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Scalar expr() {
    Scalar acc = term();
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }
  Scalar term() {
    Scalar acc = unary();
    for (;;) {
      if (eat('*')) acc *= unary();
      else if (eat('/')) {
        Scalar d = unary();
        if (d.is_zero()) throw DivisionByZero("division by zero in '" + std::string(t_) + "'");
        acc /= d;
      } else {
        return acc;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Scalar power() {
    Scalar base = atom();
    if (eat('^')) {
      skip();
      bool neg = false;
      if (eat('-')) neg = true;
      else eat('+');
      skip();
      std::size_t start = pos_;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      int k = std::stoi(std::string(t_.substr(start, pos_ - start)));
      if (neg && base.is_zero()) throw DivisionByZero("zero to a negative power");
      return base.pow(neg ? -k : k);
    }
    return base;
  }
  Scalar atom() {
    skip();
    if (pos_ >= t_.size()) fail("unexpected end of input");
    char c = t_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar s = expr();
      if (!eat(')')) fail("expected ')'");
      return s;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      return Scalar(parse_rational(t_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < t_.size() && std::isalnum(static_cast<unsigned char>(t_[pos_]))) ++pos_;
      auto name = t_.substr(start, pos_ - start);
      if (param_index(name) < 0) fail("unknown parameter '" + std::string(name) + "'");
      return Scalar::param(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace sqf
