#include "sqf/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "sqf/errors.hpp"

namespace sqf {

bool GrlexGreater::operator()(const std::vector<std::uint16_t>& a,
                              const std::vector<std::uint16_t>& b) const {
  unsigned da = 0, db = 0;
  for (auto x : a) da += x;
  for (auto x : b) db += x;
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(const Rational& c, std::size_t nvars) {
  MultiPoly r(nvars);
  if (!sqf::is_zero(c)) {
    Rational v = c;
    v.canonicalize();
    r.terms_.emplace(Exponent(nvars, 0), v);
  }
  return r;
}

MultiPoly MultiPoly::variable(std::size_t index, std::size_t nvars) {
  MultiPoly r(nvars);
  Exponent e(nvars, 0);
  e.at(index) = 1;
  r.terms_.emplace(std::move(e), Rational(1));
  return r;
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponent e) {
  MultiPoly r(e.size());
  if (!sqf::is_zero(c)) {
    Rational v = c;
    v.canonicalize();
    r.terms_.emplace(std::move(e), v);
  }
  return r;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  auto it = terms_.find(Exponent(nvars_, 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::is_one() const { return is_constant() && constant_value() == 1; }

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (auto x : terms_.begin()->first) d += x;
  return d;
}

int MultiPoly::degree_in(std::size_t v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) d = std::max<int>(d, e[v]);
  return d;
}

int MultiPoly::main_variable() const {
  int best = -1;
  for (const auto& [e, c] : terms_)
    for (int i = static_cast<int>(nvars_) - 1; i > best; --i)
      if (e[i]) {
        best = i;
        break;
      }
  return best;
}

std::map<int, MultiPoly> MultiPoly::coefficients_in(std::size_t v) const {
  std::map<int, MultiPoly> out;
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    int k = f[v];
    f[v] = 0;
    auto it = out.try_emplace(k, nvars_).first;
    it->second.add_term(f, c);
  }
  return out;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  assert(e.size() == nvars_);
  if (sqf::is_zero(c)) return;
  Rational v = c;
  v.canonicalize();
  auto [it, fresh] = terms_.try_emplace(e, v);
  if (!fresh) {
    it->second += v;
    if (sqf::is_zero(it->second)) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r(std::max(nvars_, o.nvars_));
  Exponent e(r.nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
  if (sqf::is_zero(c)) return MultiPoly(nvars_);
  MultiPoly r = *this;
  for (auto& [e, x] : r.terms_) x *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(1, nvars_), b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    k >>= 1u;
    if (k) b = b * b;
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& o) const {
  if (o.is_zero()) throw DivisionByZero("polynomial division by zero");
  MultiPoly q(nvars_), r = *this;
  const auto& lb = o.leading_exponent();
  const auto& lc = o.leading_coefficient();
  Exponent t(nvars_);
  while (!r.is_zero()) {
    const auto& lr = r.leading_exponent();
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      t[i] = lr[i] - lb[i];
    }
    MultiPoly m = monomial(r.leading_coefficient() / lc, t);
    q += m;
    r -= m * o;
  }
  return q;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading_coefficient());
}

Rational MultiPoly::evaluate(const std::vector<std::optional<Rational>>& values, std::size_t* unbound) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (i >= values.size() || !values[i]) {
        if (unbound) *unbound = i;
        throw UnboundParameter("unbound variable index " + std::to_string(i));
      }
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), values[i]->get_num_mpz_t(), e[i]);
      mpz_pow_ui(den.get_mpz_t(), values[i]->get_den_mpz_t(), e[i]);
      t *= Rational(num, den);
    }
    sum += t;
  }
  sum.canonicalize();
  return sum;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool unit = std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    Rational a = abs(c);
    if (sgn(c) < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    bool need_star = false;
    if (unit || a != 1) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

namespace {

MultiPoly content_in(const MultiPoly& a, std::size_t v);

MultiPoly exact(const MultiPoly& a, const MultiPoly& b) {
  auto q = a.divide_exact(b);
  assert(q);
  return *q;
}

MultiPoly primitive_in(const MultiPoly& a, std::size_t v) {
  if (a.is_zero()) return a;
  return exact(a, content_in(a, v)).monic();
}

MultiPoly content_in(const MultiPoly& a, std::size_t v) {
  MultiPoly g(a.nvars());
  for (const auto& [k, c] : a.coefficients_in(v)) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

MultiPoly pseudo_remainder(MultiPoly r, const MultiPoly& b, std::size_t v) {
  int db = b.degree_in(v);
  auto cb = b.coefficients_in(v);
  const MultiPoly& lcb = cb.rbegin()->second;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    int dr = r.degree_in(v);
    MultiPoly lcr = r.coefficients_in(v).rbegin()->second;
    MultiPoly::Exponent e(r.nvars(), 0);
    e[v] = static_cast<std::uint16_t>(dr - db);
    r = lcb * r - lcr * MultiPoly::monomial(1, e) * b;
  }
  return r;
}

// a with every variable except v replaced by pt
MultiPoly image(const MultiPoly& a, std::size_t v, const std::vector<Rational>& pt) {
  MultiPoly r(a.nvars());
  for (const auto& [e, c] : a.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != v)
        for (int k = 0; k < e[i]; ++k) t *= pt[i];
    MultiPoly::Exponent f(a.nvars(), 0);
    f[v] = e[v];
    r.add_term(f, t);
  }
  return r;
}

int univariate_gcd_degree(MultiPoly p, MultiPoly r, std::size_t v) {
  if (p.degree_in(v) < r.degree_in(v)) std::swap(p, r);
  while (!r.is_zero()) {
    MultiPoly rem = pseudo_remainder(p, r, v).monic();
    p = std::move(r);
    r = std::move(rem);
  }
  return p.degree_in(v);
}

// degree in v of gcd(a,b) at a point where neither leading coefficient vanishes; an upper bound
std::optional<int> image_gcd_degree(const MultiPoly& a, const MultiPoly& b, std::size_t v) {
  static const int primes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Rational> pt(a.nvars());
    for (std::size_t i = 0; i < pt.size(); ++i) pt[i] = Rational(primes[(i + 3 * attempt) % 14], attempt + 1);
    MultiPoly ia = image(a, v, pt), ib = image(b, v, pt);
    if (ia.degree_in(v) != a.degree_in(v) || ib.degree_in(v) != b.degree_in(v)) continue;
    return univariate_gcd_degree(ia, ib, v);
  }
  return std::nullopt;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  const std::size_t n = std::max(a.nvars(), b.nvars());
  if (a.is_constant() || b.is_constant()) return MultiPoly::constant(1, n);
  int va = a.main_variable(), vb = b.main_variable();
  int v = std::max(va, vb);
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);
  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly g = gcd(ca, cb);
  MultiPoly p = exact(a, ca), r = exact(b, cb);
  if (p.degree_in(v) < r.degree_in(v)) std::swap(p, r);
  if (auto k = image_gcd_degree(p, r, v)) {
    if (*k == 0) return g.monic();
    if (*k == r.degree_in(v) && p.divide_exact(r)) return (r * g).monic();
  }
  while (!r.is_zero()) {
    MultiPoly rem = pseudo_remainder(p, r, v).monic();
    p = std::move(r);
    r = rem.is_zero() ? rem : primitive_in(rem, v);
  }
  return (primitive_in(p, v) * g).monic();
}

}  // namespace sqf
