#include "sqf/lsa_novikov.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sqf {

ProductTable make_product(const SuperSpace& s, const std::vector<BracketSpec>& products) {
  ProductTable p{s, Tensor3(s.dim())};
  for (const auto& b : products) {
    if (b.rhs.size() != s.dim() || b.i >= s.dim() || b.j >= s.dim()) throw DimensionMismatch("product rhs length");
    for (std::size_t k = 0; k < s.dim(); ++k)
      if (!b.rhs[k].is_zero()) p.m(b.i, b.j, k) += b.rhs[k];
  }
  return p;
}

bool is_even_product(const ProductTable& p) {
  const auto& s = p.space;
  std::size_t d = s.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!p.m(i, j, k).is_zero() && s.parity(i) + s.parity(j) != s.parity(k)) return false;
  return true;
}

Vec product(const ProductTable& p, const Vec& x, const Vec& y) { return apply_tensor(p.m, x, y); }

Vec associator(const ProductTable& p, const Vec& x, const Vec& y, const Vec& z) {
  return product(p, product(p, x, y), z) - product(p, x, product(p, y, z));
}

namespace {

Vec e(const ProductTable& p, std::size_t i) { return unit_vector(i, p.space.dim()); }
int pb(const ProductTable& p, std::size_t i) { return bit(p.space.parity(i)); }
Scalar sg(int k) { return Scalar(sgn_pow(k)); }

Vec basis_assoc(const ProductTable& p, std::size_t x, std::size_t y, std::size_t z) {
  return associator(p, e(p, x), e(p, y), e(p, z));
}

Vec basis_prod(const ProductTable& p, const Vec& a, std::size_t y) { return product(p, a, e(p, y)); }

void note(std::vector<TripleResidual>& f, std::size_t i, std::size_t j, std::size_t k, const Vec& v) {
  if (f.size() < 4) f.push_back({i, j, k, v});
}

}  // namespace

Vec n_functional(const ProductTable& p, std::size_t x, std::size_t y, std::size_t z) {
  Vec zx = product(p, e(p, z), e(p, x)), zy = product(p, e(p, z), e(p, y));
  return basis_prod(p, zx, y) - sg(pb(p, x) * pb(p, y)) * basis_prod(p, zy, x);
}

Vec t_functional(const ProductTable& p, std::size_t x, std::size_t y, std::size_t z) {
  return basis_assoc(p, x, y, z) - sg(pb(p, x) * pb(p, y)) * basis_assoc(p, y, x, z);
}

LawReport is_left_symmetric(const ProductTable& p) {
  LawReport r;
  std::size_t d = p.space.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec t = t_functional(p, i, j, k);
        if (!is_zero_vector(t)) {
          r.ok = false;
          note(r.failures, i, j, k, t);
        }
      }
  return r;
}

NovikovReport is_novikov(const ProductTable& p) {
  NovikovReport r;
  LawReport ls = is_left_symmetric(p);
  r.lssa = ls.ok;
  r.failures = ls.failures;
  std::size_t d = p.space.dim();
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        Vec n = n_functional(p, x, y, z);
        if (is_zero_vector(n)) continue;
        if (pb(p, x) == pb(p, y)) r.equal_parity = false;
        else r.mixed_parity = false;
        note(r.failures, x, y, z, n);
      }
  r.ok = r.lssa && r.equal_parity;
  return r;
}

BNReport is_balinsky_novikov(const ProductTable& p) {
  BNReport r;
  std::size_t d = p.space.dim();
  auto fail = [&](bool& flag, const std::string& what, std::size_t x, std::size_t y, std::size_t z) {
    flag = false;
    r.ok = false;
    if (r.failures.size() < 4)
      r.failures.push_back(what + " at (e" + std::to_string(x + 1) + ",e" + std::to_string(y + 1) + ",e" +
                           std::to_string(z + 1) + ")");
  };
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        int px = pb(p, x), py = pb(p, y), pz = pb(p, z);
        Vec ex = e(p, x), ey = e(p, y), ez = e(p, z);
        Vec xy = product(p, ex, ey), xz = product(p, ex, ez), yz = product(p, ey, ez);
        if (px + py + pz <= 1) {
          if (!is_zero_vector(basis_assoc(p, x, y, z) - basis_assoc(p, y, x, z)))
            fail(r.axiom1, "left symmetry", x, y, z);
          if (!is_zero_vector(product(p, xy, ez) - product(p, xz, ey))) fail(r.axiom1, "right commutativity", x, y, z);
        }
        if (px && py && !pz && !is_zero_vector(product(p, xy, ez) - product(p, xz, ey)))
          fail(r.axiom3, "odd-odd-even compatibility", x, y, z);
        if (!px && py && pz &&
            !is_zero_vector(product(p, ex, yz) - product(p, xy, ez) - product(p, ey, xz)))
          fail(r.axiom3, "even-odd-odd compatibility", x, y, z);
        if (px && py && pz && !is_zero_vector(product(p, ex, yz) - product(p, xy, ez) - product(p, xz, ey)))
          fail(r.axiom3, "odd-odd-odd compatibility", x, y, z);
      }
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      if (pb(p, x) && pb(p, y) && !is_zero_vector(product(p, e(p, x), e(p, y)) - product(p, e(p, y), e(p, x))))
        fail(r.axiom2, "odd commutativity", x, y, y);
  return r;
}

LieSuperStructure induced_bracket(const ProductTable& p) {
  std::size_t d = p.space.dim();
  LieSuperStructure l{p.space, Tensor3(d)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) l.c(i, j, k) = p.m(i, j, k) - sg(pb(p, i) * pb(p, j)) * p.m(j, i, k);
  return l;
}

LieSuperStructure bn_induced_bracket(const ProductTable& p) {
  std::size_t d = p.space.dim();
  LieSuperStructure l{p.space, Tensor3(d)};
  Scalar half(Rational(1, 2));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar &a = p.m(i, j, k), &b = p.m(j, i, k);
        int pi = pb(p, i), pj = pb(p, j);
        if (!pi && !pj) l.c(i, j, k) = a - b;
        else if (!pi && pj) l.c(i, j, k) = a - half * b;
        else if (pi && !pj) l.c(i, j, k) = half * a - b;
        else l.c(i, j, k) = a;
      }
  return l;
}

CompatibilityReport compare_brackets(const LieSuperStructure& got, const LieSuperStructure& want) {
  if (got.c.d != want.c.d) throw DimensionMismatch("bracket tables differ in size");
  CompatibilityReport r;
  std::size_t d = got.c.d;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (got.c(i, j, k) != want.c(i, j, k)) {
          r.ok = false;
          r.mismatches.emplace_back(i, j);
          break;
        }
  return r;
}

// ---- QuadExpr ----

QuadExpr QuadExpr::var(int v) {
  QuadExpr q;
  q.lin[v] = 1;
  return q;
}

std::vector<int> QuadExpr::variables() const {
  std::set<int> s;
  for (const auto& [v, _] : lin) s.insert(v);
  for (const auto& [vv, _] : quad) {
    s.insert(vv.first);
    s.insert(vv.second);
  }
  return {s.begin(), s.end()};
}

void QuadExpr::prune() {
  std::erase_if(lin, [](const auto& kv) { return sgn(kv.second) == 0; });
  std::erase_if(quad, [](const auto& kv) { return sgn(kv.second) == 0; });
}

QuadExpr& QuadExpr::operator+=(const QuadExpr& o) {
  c += o.c;
  for (const auto& [v, r] : o.lin) lin[v] += r;
  for (const auto& [v, r] : o.quad) quad[v] += r;
  prune();
  return *this;
}

QuadExpr& QuadExpr::operator-=(const QuadExpr& o) {
  c -= o.c;
  for (const auto& [v, r] : o.lin) lin[v] -= r;
  for (const auto& [v, r] : o.quad) quad[v] -= r;
  prune();
  return *this;
}

QuadExpr& QuadExpr::operator*=(const Rational& r) {
  if (sgn(r) == 0) return *this = QuadExpr();
  c *= r;
  for (auto& [_, x] : lin) x *= r;
  for (auto& [_, x] : quad) x *= r;
  return *this;
}

QuadExpr operator*(const QuadExpr& a, const QuadExpr& b) {
  if ((!a.quad.empty() && !b.is_constant()) || (!b.quad.empty() && !a.is_constant()))
    throw NonAffineExpression("product exceeds degree two");
  QuadExpr r = a * b.c;
  QuadExpr t;
  for (const auto& [v, x] : b.lin) t.lin[v] = a.c * x;
  for (const auto& [v, x] : b.quad) t.quad[v] = a.c * x;
  for (const auto& [u, x] : a.lin)
    for (const auto& [v, y] : b.lin) t.quad[{std::min(u, v), std::max(u, v)}] += x * y;
  t.prune();
  return r += t;
}

std::string QuadExpr::str(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](const Rational& r, const std::string& mono) {
    Rational a = abs(r);
    if (first) os << (sgn(r) < 0 ? "-" : "");
    else os << (sgn(r) < 0 ? " - " : " + ");
    first = false;
    if (mono.empty()) os << a.get_str();
    else if (a == 1) os << mono;
    else os << a.get_str() << "*" << mono;
  };
  for (const auto& [vv, r] : quad)
    term(r, vv.first == vv.second ? names[vv.first] + "^2" : names[vv.first] + "*" + names[vv.second]);
  for (const auto& [v, r] : lin) term(r, names[v]);
  if (sgn(c) != 0) term(c, "");
  return first ? "0" : os.str();
}

// ---- UnknownProduct ----

UnknownProduct::UnknownProduct(const SuperSpace& s) : space(s) {
  std::size_t d = s.dim();
  m.assign(d, std::vector<QVec>(d, QVec(d)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (s.parity(i) + s.parity(j) != s.parity(k)) continue;
        m[i][j][k] = QuadExpr::var(static_cast<int>(names.size()));
        names.push_back("l" + std::to_string(k + 1) + "_" + std::to_string(i + 1) + std::to_string(j + 1));
      }
}

int UnknownProduct::index(std::size_t k, std::size_t i, std::size_t j) const {
  const auto& q = m.at(i - 1).at(j - 1).at(k - 1);
  if (q.lin.size() != 1) return -1;
  return q.lin.begin()->first;
}

namespace {

QVec qprod(const UnknownProduct& u, const QVec& a, const QVec& b) {
  std::size_t d = u.space.dim();
  QVec out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      QuadExpr ab = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k)
        if (!u.m[i][j][k].is_zero()) out[k] += ab * u.m[i][j][k];
    }
  }
  return out;
}

QVec qunit(std::size_t i, std::size_t d) {
  QVec v(d);
  v[i] = QuadExpr(Rational(1));
  return v;
}

QVec qsub(QVec a, const QVec& b, int sign) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    QuadExpr t = b[k];
    if (sign < 0) t *= Rational(-1);
    a[k] -= t;
  }
  return a;
}

QVec qassoc(const UnknownProduct& u, std::size_t x, std::size_t y, std::size_t z) {
  std::size_t d = u.space.dim();
  QVec ex = qunit(x, d), ey = qunit(y, d), ez = qunit(z, d);
  return qsub(qprod(u, qprod(u, ex, ey), ez), qprod(u, ex, qprod(u, ey, ez)), 1);
}

}  // namespace

QVec n_functional(const UnknownProduct& u, std::size_t x, std::size_t y, std::size_t z) {
  std::size_t d = u.space.dim();
  QVec ex = qunit(x, d), ey = qunit(y, d), ez = qunit(z, d);
  int s = sgn_pow(bit(u.space.parity(x)) * bit(u.space.parity(y)));
  return qsub(qprod(u, qprod(u, ez, ex), ey), qprod(u, qprod(u, ez, ey), ex), s);
}

QVec t_functional(const UnknownProduct& u, std::size_t x, std::size_t y, std::size_t z) {
  int s = sgn_pow(bit(u.space.parity(x)) * bit(u.space.parity(y)));
  return qsub(qassoc(u, x, y, z), qassoc(u, y, x, z), s);
}

// ---- AffineStore ----

QuadExpr AffineStore::reduce(const QuadExpr& e) const {
  auto val = [&](int v) {
    auto it = pivots_.find(v);
    return it == pivots_.end() ? QuadExpr::var(v) : it->second;
  };
  QuadExpr r(e.c);
  for (const auto& [v, x] : e.lin) r += val(v) * x;
  for (const auto& [vv, x] : e.quad) r += (val(vv.first) * val(vv.second)) * x;
  return r;
}

bool AffineStore::add(const QuadExpr& e) {
  QuadExpr r = reduce(e);
  if (r.is_zero()) return true;
  if (!r.is_affine()) throw NonAffineExpression("equation is quadratic after reduction");
  if (r.is_constant()) {
    contradiction_ = true;
    return false;
  }
  auto [v, coef] = *r.lin.begin();
  if (v < 0 || static_cast<std::size_t>(v) >= nvars_) throw DimensionMismatch("unknown out of range");
  QuadExpr rest = r;
  rest.lin.erase(v);
  rest *= Rational(-1 / coef);
  for (auto& [_, ex] : pivots_) {
    auto it = ex.lin.find(v);
    if (it == ex.lin.end()) continue;
    Rational a = it->second;
    ex.lin.erase(it);
    ex += rest * a;
  }
  pivots_[v] = rest;
  return true;
}

// ---- parsing ----

QuadExpr parse_affine(const std::string& s, const UnknownProduct& u) {
  auto side = [&](const std::string& t) {
    QuadExpr q;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < t.size() && t[i] == ' ') ++i;
    };
    skip();
    if (i == t.size()) throw ParseError("empty side in '" + s + "'");
    while (i < t.size()) {
      int sign = 1;
      skip();
      while (i < t.size() && (t[i] == '+' || t[i] == '-')) {
        if (t[i] == '-') sign = -sign;
        ++i;
        skip();
      }
      Rational coef(sign);
      std::size_t j = i;
      while (j < t.size() && (std::isdigit(static_cast<unsigned char>(t[j])) || t[j] == '/')) ++j;
      if (j > i) {
        coef *= parse_rational(t.substr(i, j - i));
        i = j;
        skip();
        if (i < t.size() && t[i] == '*') {
          ++i;
          skip();
        } else {
          q += QuadExpr(coef);
          skip();
          continue;
        }
      }
      j = i;
      while (j < t.size() && (std::isalnum(static_cast<unsigned char>(t[j])) || t[j] == '_')) ++j;
      std::string name = t.substr(i, j - i);
      auto it = std::find(u.names.begin(), u.names.end(), name);
      if (it == u.names.end()) throw ParseError("unknown '" + name + "' in '" + s + "'");
      q += QuadExpr::var(static_cast<int>(it - u.names.begin())) * coef;
      i = j;
      skip();
    }
    return q;
  };
  auto eq = s.find('=');
  if (eq == std::string::npos) return side(s);
  return side(s.substr(0, eq)) - side(s.substr(eq + 1));
}

// ---- replay ----

namespace {

std::string functional_name(const ObstructionStep& st) {
  return std::string(1, st.functional) + "(e" + std::to_string(st.x) + ",e" + std::to_string(st.y) + ",e" +
         std::to_string(st.z) + ")";
}

QVec evaluate_functional(const UnknownProduct& u, const ObstructionStep& st) {
  if (st.functional == 'N') return n_functional(u, st.x - 1, st.y - 1, st.z - 1);
  if (st.functional == 'T') return t_functional(u, st.x - 1, st.y - 1, st.z - 1);
  throw UnknownCertificate("functional must be N or T");
}

// returns false if the store became contradictory
bool impose(const UnknownProduct& u, AffineStore& store, const ObstructionStep& st, StepOutcome* out) {
  for (const auto& q : evaluate_functional(u, st)) {
    QuadExpr r = store.reduce(q);
    if (r.is_zero()) continue;
    if (!r.is_affine())
      throw NonAffineExpression(functional_name(st) + " leaves quadratic terms: " + r.str(u.names));
    if (out) out->equations.push_back(r.str(u.names) + " = 0");
    if (!store.add(r)) return false;
  }
  return true;
}

void check_claims(const UnknownProduct& u, const AffineStore& store, const ObstructionStep& st) {
  for (const auto& c : st.claims)
    if (!store.implies(parse_affine(c, u)))
      throw StepNotImplied(functional_name(st) + ": '" + c + "' does not follow, residual " +
                           store.reduce(parse_affine(c, u)).str(u.names));
}

Rational eval_univariate(const QuadExpr& q, int v, const Rational& x) {
  Rational r = q.c;
  if (auto it = q.lin.find(v); it != q.lin.end()) r += it->second * x;
  if (auto it = q.quad.find({v, v}); it != q.quad.end()) r += it->second * x * x;
  return r;
}

void run_steps(const UnknownProduct& u, AffineStore& store, const std::vector<ObstructionStep>& steps,
               ObstructionReport* rep);

void branch(const UnknownProduct& u, AffineStore& store, const ObstructionStep& st, ObstructionReport* rep) {
  QuadExpr var = parse_affine(st.var, u);
  int v = var.lin.begin()->first;
  std::set<Rational> roots(st.roots.begin(), st.roots.end());
  bool found = false;
  std::string used;
  for (const auto& q : evaluate_functional(u, st)) {
    QuadExpr r = store.reduce(q);
    if (r.is_zero() || r.variables() != std::vector<int>{v}) continue;
    std::size_t degree = r.quad.empty() ? 1 : 2;
    if (degree != roots.size()) continue;
    bool all = std::all_of(roots.begin(), roots.end(), [&](const Rational& x) { return sgn(eval_univariate(r, v, x)) == 0; });
    if (all) {
      found = true;
      used = r.str(u.names);
      break;
    }
  }
  if (!found) throw StepNotImplied(functional_name(st) + " does not force " + st.var + " into the listed roots");
  if (!roots.count(st.keep)) throw StepNotImplied("kept root is not a listed root");
  StepOutcome out{"branch on " + st.var + " from " + functional_name(st), st.displayed, {used + " = 0"}};
  for (const auto& x : roots) {
    if (x == st.keep) continue;
    AffineStore side = store;
    side.add(var - QuadExpr(x));
    bool closed = side.contradictory();
    for (const auto& c : st.closing) {
      if (closed) break;
      closed = !impose(u, side, c, nullptr);
    }
    if (!closed) throw StepNotImplied("branch " + st.var + " = " + x.get_str() + " is not closed");
    out.equations.push_back(st.var + " = " + x.get_str() + " closed by contradiction");
  }
  store.add(var - QuadExpr(st.keep));
  out.equations.push_back(st.var + " = " + st.keep.get_str());
  if (rep) rep->steps.push_back(out);
}

void run_steps(const UnknownProduct& u, AffineStore& store, const std::vector<ObstructionStep>& steps,
               ObstructionReport* rep) {
  for (const auto& st : steps) {
    if (st.kind == StepKind::kBranch) {
      branch(u, store, st, rep);
      continue;
    }
    StepOutcome out{functional_name(st) + " = 0", st.displayed, {}};
    if (st.kind == StepKind::kImpose && !impose(u, store, st, &out))
      throw StepNotImplied(functional_name(st) + " contradicts the store");
    check_claims(u, store, st);
    for (const auto& c : st.claims) out.equations.push_back("=> " + c);
    if (rep) rep->steps.push_back(out);
  }
}

ObstructionStep imp(char f, std::size_t x, std::size_t y, std::size_t z, std::vector<std::string> claims,
                    bool displayed = true) {
  ObstructionStep s;
  s.functional = f;
  s.x = x;
  s.y = y;
  s.z = z;
  s.claims = std::move(claims);
  s.displayed = displayed;
  return s;
}

std::vector<ObstructionStep> script() {
  ObstructionStep br = imp('N', 1, 3, 1, {});
  br.kind = StepKind::kBranch;
  br.var = "l3_31";
  br.roots = {Rational(0), Rational(-1)};
  br.keep = 0;
  br.displayed = false;
  br.closing = {imp('T', 1, 3, 1, {})};
  return {
      imp('N', 4, 4, 4, {"l3_14=0", "l4_14=0"}),
      imp('N', 4, 1, 4, {"l1_11=0", "l2_11=0"}),
      br,
      imp('N', 1, 3, 1, {"l4_31=0"}),
      imp('T', 3, 4, 1, {"l1_21=0", "l2_21=0"}, false),
      imp('T', 2, 1, 2, {"l1_22=0", "l2_22=0"}),
      imp('N', 4, 2, 1, {"l3_42=-1", "l4_42=0", "l4_24=0", "l3_24=0"}),
      imp('N', 4, 2, 4, {"l1_34=0", "l2_43=0"}),
  };
}

const std::vector<std::string>& displayed_block() {
  static const std::vector<std::string> b = {
      "l3_13=l3_31+1", "l4_13=l4_31", "l2_12=l2_21+1", "l1_21=l1_12", "l3_41=l3_14", "l4_41=l4_14",
      "l3_24=l3_42+1", "l4_42=l4_24", "l3_32=l3_23",   "l4_32=l4_23", "l1_33=0",     "l2_33=0",
      "l1_44=1/2",     "l2_44=0",     "l2_34=-l2_43-1/2", "l1_43=-l1_34"};
  return b;
}

}  // namespace

ObstructionReport novikov_obstruction_replay(const std::string& entry_id, const LieSuperStructure& l) {
  if (entry_id != "D10_0_1" && entry_id != "D10_0_2") throw UnknownCertificate("no Novikov obstruction for " + entry_id);
  if (l.space.sdim() != std::pair<int, int>{2, 2}) throw DimensionMismatch("replay needs sdim 2|2");
  for (const auto& x : l.c.v)
    if (!x.is_rational()) throw ParametricUnsupported("replay needs numeric brackets");
  UnknownProduct u(l.space);
  AffineStore store(u.names.size());
  ObstructionReport rep;
  rep.entry_id = entry_id;
  std::size_t d = l.space.dim();
  StepOutcome compat{"compatibility with the brackets", true, {}};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      int s = sgn_pow(bit(l.space.parity(i)) * bit(l.space.parity(j)));
      for (std::size_t k = 0; k < d; ++k) {
        QuadExpr q = u.m[i][j][k] - u.m[j][i][k] * Rational(s) - QuadExpr(l.c(i, j, k).to_rational());
        if (q.is_zero()) continue;
        compat.equations.push_back(q.str(u.names) + " = 0");
        if (!store.add(q)) throw StepNotImplied("bracket compatibility is inconsistent");
      }
    }
  rep.steps.push_back(compat);
  if (entry_id == "D10_0_1") {
    for (const auto& c : displayed_block()) {
      if (!store.implies(parse_affine(c, u))) throw StepNotImplied("displayed constraint '" + c + "' does not follow");
      rep.displayed_constraints.push_back(c);
    }
  }
  run_steps(u, store, script(), &rep);
  for (const auto& q : n_functional(u, 2, 3, 3)) rep.terminal.push_back(store.reduce(q));
  for (std::size_t k = 0; k < d; ++k) {
    if (!rep.terminal[k].is_constant())
      throw StepNotImplied("terminal N(e3,e4,e4) still depends on " + rep.terminal[k].str(u.names));
    if (k != 2 && !rep.terminal[k].is_zero()) throw StepNotImplied("terminal N(e3,e4,e4) is not a multiple of e3");
  }
  rep.terminal_coefficient = rep.terminal[2].c;
  rep.ok = sgn(rep.terminal_coefficient) != 0;
  return rep;
}

}  // namespace sqf
