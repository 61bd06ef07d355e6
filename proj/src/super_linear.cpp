#include "sqf/super_linear.hpp"

#include <set>
#include <sstream>

namespace sqf {

std::pair<int, int> SuperSpace::sdim() const {
  int m = 0, n = 0;
  for (const auto& b : basis) (b.parity == Parity::kEven ? m : n)++;
  return {m, n};
}

std::vector<Parity> SuperSpace::parities() const {
  std::vector<Parity> p;
  for (const auto& b : basis) p.push_back(b.parity);
  return p;
}

bool SuperSpace::valid() const {
  std::set<std::string> seen;
  for (const auto& b : basis)
    if (!seen.insert(b.label).second) return false;
  return true;
}

SuperSpace standard_space(int m, int n, const std::string& name) {
  SuperSpace s{name, {}};
  for (int i = 0; i < m + n; ++i)
    s.basis.push_back({"e" + std::to_string(i + 1), i < m ? Parity::kEven : Parity::kOdd});
  return s;
}

SuperSpace make_space(const std::string& name, const std::vector<std::pair<std::string, Parity>>& basis) {
  SuperSpace s{name, {}};
  for (const auto& [l, p] : basis) s.basis.push_back({l, p});
  return s;
}

SuperSpace parity_shift(const SuperSpace& v) {
  auto untag = [](const std::string& l, std::string* out) {
    if (l.size() > 4 && l.rfind("Pi(", 0) == 0 && l.back() == ')') {
      *out = l.substr(3, l.size() - 4);
      return true;
    }
    return false;
  };
  SuperSpace r;
  if (!untag(v.name, &r.name)) r.name = "Pi(" + v.name + ")";
  for (const auto& b : v.basis) {
    std::string l;
    if (!untag(b.label, &l)) l = "Pi(" + b.label + ")";
    r.basis.push_back({l, flip(b.parity)});
  }
  return r;
}

Vec unit_vector(std::size_t i, std::size_t d) {
  Vec v(d);
  v.at(i) = Scalar(1);
  return v;
}

Vec zero_vector(std::size_t d) { return Vec(d); }

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

Vec operator*(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  if (c.is_zero()) return r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r[i] = c * v[i];
  return r;
}

bool is_zero_vector(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

bool is_homogeneous(const SuperSpace& s, const Vec& v, Parity* out) {
  bool seen[2] = {false, false};
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) seen[bit(s.parity(i))] = true;
  if (out) *out = seen[1] ? Parity::kOdd : Parity::kEven;
  return !(seen[0] && seen[1]);
}

std::string vec_str(const SuperSpace& s, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (v[i] == Scalar(1)) os << s.basis[i].label;
    else os << "(" << v[i] << ")" << s.basis[i].label;
  }
  return first ? "0" : os.str();
}

SubSpace SubSpace::span(std::size_t ambient_dim, const std::vector<Vec>& gens) {
  ScalarMatrix m(gens.size(), ambient_dim);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != ambient_dim) throw DimensionMismatch("subspace generator length");
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = gens[i][j];
  }
  auto piv = rref(m);
  SubSpace s(ambient_dim);
  s.rows_ = ScalarMatrix(piv.size(), ambient_dim);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) s.rows_(i, j) = m(i, j);
  return s;
}

std::vector<Vec> SubSpace::basis() const {
  std::vector<Vec> b;
  for (std::size_t i = 0; i < rows_.rows; ++i) b.push_back(rows_.row(i));
  return b;
}

bool SubSpace::contains(const Vec& v) const {
  auto gens = basis();
  gens.push_back(v);
  return span(ambient_, gens).dim() == dim();
}

bool LinearMap::respects_parity(const SuperSpace& domain, const SuperSpace& codomain) const {
  for (std::size_t j = 0; j < domain.dim(); ++j)
    for (std::size_t i = 0; i < codomain.dim(); ++i)
      if (!matrix(i, j).is_zero() && codomain.parity(i) != domain.parity(j) + parity) return false;
  return true;
}

ScalarMatrix form_values(const SuperSpace& s, const BilForm& w) {
  ScalarMatrix v = w.gram;
  for (std::size_t i = 0; i < s.dim(); ++i)
    if (sgn_pow(bit(w.parity) * bit(s.parity(i))) < 0)
      for (std::size_t j = 0; j < s.dim(); ++j) v(i, j) = -v(i, j);
  return v;
}

BilForm form_from_values(const SuperSpace& s, Parity parity, const ScalarMatrix& values) {
  BilForm w{parity, values};
  w.gram = form_values(s, w);  // the sign is an involution
  return w;
}

bool is_homogeneous_form(const SuperSpace& s, const BilForm& w) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!w.gram(i, j).is_zero() && s.parity(i) + s.parity(j) != w.parity) return false;
  return true;
}

ScalarMatrix wedge_values(const std::vector<WedgeTerm>& terms, const SuperSpace& s) {
  std::size_t d = s.dim();
  ScalarMatrix v(d, d);
  for (const auto& t : terms) {
    if (t.i >= d || t.j >= d) throw DimensionMismatch("wedge index out of range");
    int sg = sgn_pow(bit(s.parity(t.i)) * bit(s.parity(t.j)));
    v(t.i, t.j) += sg > 0 ? t.coeff : -t.coeff;
    v(t.j, t.i) -= t.coeff;
  }
  return v;
}

BilForm wedge_form(const std::vector<WedgeTerm>& terms, const SuperSpace& s, Parity parity) {
  for (const auto& t : terms)
    if (s.parity(t.i) + s.parity(t.j) != parity)
      throw MixedParityTerm("term e" + std::to_string(t.i + 1) + "*^e" + std::to_string(t.j + 1) +
                            "* does not have the declared parity");
  return form_from_values(s, parity, wedge_values(terms, s));
}

BilForm upsetting(const SuperSpace& s, const BilForm& w) {
  ScalarMatrix v = form_values(s, w), u(s.dim(), s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Scalar& x = v(j, i);
      u(i, j) = sgn_pow(bit(s.parity(i)) * bit(s.parity(j))) > 0 ? x : -x;
    }
  return form_from_values(s, w.parity, u);
}

bool is_antisymmetric_values(const SuperSpace& s, const ScalarMatrix& v) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j) {
      Scalar t = v(j, i);
      if (sgn_pow(bit(s.parity(i)) * bit(s.parity(j))) < 0) t = -t;
      if (!(t + v(i, j)).is_zero()) return false;
    }
  return true;
}

Symmetry symmetry_class(const SuperSpace& s, const BilForm& w) {
  ScalarMatrix u = upsetting(s, w).gram;
  bool anti = true, sym = true;
  for (std::size_t k = 0; k < u.a.size(); ++k) {
    if (!(u.a[k] + w.gram.a[k]).is_zero()) anti = false;
    if (u.a[k] != w.gram.a[k]) sym = false;
  }
  if (anti) return Symmetry::kAntiSymmetric;
  return sym ? Symmetry::kSymmetric : Symmetry::kNeither;
}

Scalar eval_values(const ScalarMatrix& values, const Vec& x, const Vec& y) {
  if (x.size() != values.rows || y.size() != values.cols) throw DimensionMismatch("eval_form vector length");
  Scalar acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !values(i, j).is_zero()) acc += x[i] * values(i, j) * y[j];
  }
  return acc;
}

Scalar eval_form(const SuperSpace& s, const BilForm& w, const Vec& x, const Vec& y) {
  return eval_values(form_values(s, w), x, y);
}

NondegeneracyReport is_nondegenerate(const BilForm& w, const std::vector<Assignment>& samples) {
  NondegeneracyReport r;
  r.det = det(w.gram);
  r.nondegenerate = !r.det.is_zero();
  for (const auto& at : samples) {
    Rational v = r.det.evaluate(at);
    if (is_zero(v)) r.samples_ok = false;
    r.sample_dets.emplace_back(at, v);
  }
  return r;
}

bool check_superdim_constraints(const SuperSpace& s, const BilForm& w) {
  if (det(w.gram).is_zero()) throw PreconditionViolated("superdimension check needs a non-degenerate form");
  auto [m, n] = s.sdim();
  if (w.parity == Parity::kEven) return m % 2 == 0;
  return m == n;
}

SubSpace orthogonal_complement(const SubSpace& sub, const ScalarMatrix& values) {
  if (det(values).is_zero()) throw DegenerateForm("orthogonal complement needs a non-degenerate form");
  std::size_t d = sub.ambient_dim();
  ScalarMatrix eq(sub.dim(), d);
  for (std::size_t r = 0; r < sub.dim(); ++r) {
    Vec s = sub.rows().row(r);
    Vec vs = values.apply(s);
    for (std::size_t i = 0; i < d; ++i) eq(r, i) = vs[i];
  }
  return SubSpace::span(d, nullspace(eq));
}

}  // namespace sqf
