#include "sqf/lie_super.hpp"

namespace sqf {

Tensor3 Tensor3::map(const std::function<Scalar(const Scalar&)>& f) const {
  Tensor3 r(d);
  for (std::size_t n = 0; n < v.size(); ++n)
    if (!v[n].is_zero()) r.v[n] = f(v[n]);
  return r;
}

Vec apply_tensor(const Tensor3& c, const Vec& x, const Vec& y) {
  if (x.size() != c.d || y.size() != c.d) throw DimensionMismatch("bracket argument length");
  Vec out(c.d);
  for (std::size_t i = 0; i < c.d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < c.d; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < c.d; ++k)
        if (!c(i, j, k).is_zero()) out[k] += xy * c(i, j, k);
    }
  }
  return out;
}

LieSuperStructure make_lie(const SuperSpace& s, const std::vector<BracketSpec>& brackets) {
  LieSuperStructure l{s, Tensor3(s.dim())};
  for (const auto& b : brackets) {
    if (b.rhs.size() != s.dim()) throw DimensionMismatch("bracket rhs length");
    int sg = sgn_pow(bit(s.parity(b.i)) * bit(s.parity(b.j)));
    for (std::size_t k = 0; k < s.dim(); ++k) {
      if (b.rhs[k].is_zero()) continue;
      l.c(b.i, b.j, k) += b.rhs[k];
      if (b.i != b.j) l.c(b.j, b.i, k) += sg > 0 ? -b.rhs[k] : b.rhs[k];
    }
  }
  return l;
}

Vec bracket(const LieSuperStructure& l, const Vec& x, const Vec& y) { return apply_tensor(l.c, x, y); }

AxiomReport check_anticommutativity(const LieSuperStructure& l) {
  AxiomReport r;
  const auto& s = l.space;
  std::size_t d = s.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& x = l.c(i, j, k);
        bool parity_ok = x.is_zero() || s.parity(i) + s.parity(j) == s.parity(k);
        Scalar sym = l.c(j, i, k);
        if (sgn_pow(bit(s.parity(i)) * bit(s.parity(j))) < 0) sym = -sym;
        if (!parity_ok || !(sym + x).is_zero()) {
          r.ok = false;
          if (r.failures.size() < 4) {
            Vec v(d);
            v[k] = sym + x;
            r.failures.push_back({i, j, k, v});
          }
          if (!parity_ok) r.detail = "parity violated";
        }
      }
  return r;
}

AxiomReport check_jacobi(const LieSuperStructure& l) {
  AxiomReport r;
  const auto& s = l.space;
  std::size_t d = s.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec x = unit_vector(i, d), y = unit_vector(j, d), z = unit_vector(k, d);
        Vec a = bracket(l, x, bracket(l, y, z));
        Vec b = bracket(l, bracket(l, x, y), z);
        Vec c = bracket(l, y, bracket(l, x, z));
        Scalar sg(sgn_pow(bit(s.parity(i)) * bit(s.parity(j))));
        Vec res = a - b - sg * c;
        if (!is_zero_vector(res)) {
          r.ok = false;
          if (r.failures.size() < 4) r.failures.push_back({i, j, k, res});
        }
      }
  return r;
}

namespace {

// signed cyclic sum for one basis triple
Scalar cyclic(const LieSuperStructure& l, const ScalarMatrix& v, std::size_t i, std::size_t j, std::size_t k) {
  const auto& s = l.space;
  std::size_t d = s.dim();
  int pi = bit(s.parity(i)), pj = bit(s.parity(j)), pk = bit(s.parity(k));
  auto om = [&](std::size_t a, std::size_t b, std::size_t c) {
    Scalar acc;
    for (std::size_t t = 0; t < d; ++t)
      if (!l.c(b, c, t).is_zero() && !v(a, t).is_zero()) acc += v(a, t) * l.c(b, c, t);
    return acc;
  };
  Scalar r = Scalar(sgn_pow(pi * pk)) * om(i, j, k);
  r += Scalar(sgn_pow(pk * pj)) * om(k, i, j);
  r += Scalar(sgn_pow(pj * pi)) * om(j, k, i);
  return r;
}

std::vector<std::pair<std::size_t, std::size_t>> wedge_basis(const SuperSpace& s, Parity parity) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j) {
      if (s.parity(i) + s.parity(j) != parity) continue;
      if (i == j && s.parity(i) == Parity::kEven) continue;
      out.emplace_back(i, j);
    }
  return out;
}

}  // namespace

ClosednessReport is_closed(const LieSuperStructure& l, const ScalarMatrix& values) {
  std::size_t d = l.space.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Scalar r = cyclic(l, values, i, j, k);
        if (!r.is_zero()) return {false, i, j, k, r};
      }
  return {};
}

CocycleSpace closed_form_space(const LieSuperStructure& l, Parity parity) {
  for (const auto& x : l.c.v)
    if (!x.is_rational()) throw ParametricUnsupported("closed_form_space needs numeric structure constants");
  const auto& s = l.space;
  std::size_t d = s.dim();
  auto wb = wedge_basis(s, parity);
  std::vector<ScalarMatrix> vals;
  for (auto [i, j] : wb) vals.push_back(wedge_values({{Scalar(1), i, j}}, s));
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        std::vector<Scalar> row(wb.size());
        bool any = false;
        for (std::size_t b = 0; b < wb.size(); ++b) {
          row[b] = cyclic(l, vals[b], i, j, k);
          any = any || !row[b].is_zero();
        }
        if (any) rows.push_back(std::move(row));
      }
  CocycleSpace out{parity, {}};
  std::vector<std::vector<Scalar>> sol;
  if (rows.empty()) {
    for (std::size_t b = 0; b < wb.size(); ++b) sol.push_back(unit_vector(b, wb.size()));
  } else {
    sol = nullspace(ScalarMatrix::from_rows(rows, wb.size()));
  }
  for (const auto& c : sol) {
    ScalarMatrix m(d, d);
    for (std::size_t b = 0; b < wb.size(); ++b)
      if (!c[b].is_zero())
        for (std::size_t n = 0; n < m.a.size(); ++n)
          if (!vals[b].a[n].is_zero()) m.a[n] += c[b] * vals[b].a[n];
    out.basis.push_back(std::move(m));
  }
  return out;
}

bool generic_determinant_vanishes(const std::vector<ScalarMatrix>& basis) {
  if (basis.empty()) return true;
  std::size_t n = basis.size(), d = basis[0].rows;
  std::vector<std::vector<MultiPoly>> g(d, std::vector<MultiPoly>(d, MultiPoly(n)));
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const Scalar& x = basis[t](i, j);
        if (!x.is_zero()) g[i][j] += MultiPoly::variable(t, n) * x.to_rational();
      }
  return det_laplace(g, MultiPoly::constant(1, n)).is_zero();
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kEven: return "even";
    case Verdict::kOdd: return "odd";
    case Verdict::kBoth: return "both";
    case Verdict::kNH: return "nh";
    case Verdict::kNone: return "none";
  }
  return "none";
}

std::optional<Verdict> verdict_from_name(const std::string& s) {
  for (auto v : {Verdict::kEven, Verdict::kOdd, Verdict::kBoth, Verdict::kNH, Verdict::kNone})
    if (verdict_name(v) == s) return v;
  return std::nullopt;
}

QFClassification quasi_frobenius_classify(const LieSuperStructure& l) {
  QFClassification q;
  CocycleSpace ev = closed_form_space(l, Parity::kEven);
  CocycleSpace od = closed_form_space(l, Parity::kOdd);
  q.dim_even = ev.basis.size();
  q.dim_odd = od.basis.size();
  q.even_generic_nondegenerate = !generic_determinant_vanishes(ev.basis);
  q.odd_generic_nondegenerate = !generic_determinant_vanishes(od.basis);
  if (q.even_generic_nondegenerate && q.odd_generic_nondegenerate) q.verdict = Verdict::kBoth;
  else if (q.even_generic_nondegenerate) q.verdict = Verdict::kEven;
  else if (q.odd_generic_nondegenerate) q.verdict = Verdict::kOdd;
  else {
    std::vector<ScalarMatrix> all = ev.basis;
    all.insert(all.end(), od.basis.begin(), od.basis.end());
    q.nh_generic_nondegenerate = !generic_determinant_vanishes(all);
    q.verdict = q.nh_generic_nondegenerate ? Verdict::kNH : Verdict::kNone;
  }
  return q;
}

bool is_ideal(const LieSuperStructure& l, const SubSpace& s) {
  std::size_t d = l.space.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& row : s.basis())
      if (!s.contains(bracket(l, unit_vector(i, d), row))) return false;
  return true;
}

bool is_lagrangian_ideal(const LieSuperStructure& l, const SubSpace& s, const ScalarMatrix& values) {
  if (!is_ideal(l, s)) return false;
  return orthogonal_complement(s, values) == s;
}

std::optional<Vec> is_exact(const LieSuperStructure& l, const ScalarMatrix& values) {
  std::size_t d = l.space.dim();
  // unknown f_k: sum_k f_k c(i,j,k) = w(e_i,e_j)
  ScalarMatrix m(d * d, d);
  Vec rhs(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) m(i * d + j, k) = l.c(i, j, k);
      rhs[i * d + j] = values(i, j);
    }
  return solve(m, rhs);
}

LieSuperStructure substitute(const LieSuperStructure& l, const Assignment& at) {
  return {l.space, l.c.map([&](const Scalar& x) { return x.substitute(at); })};
}

LieSuperStructure substitute(const LieSuperStructure& l, const std::map<std::size_t, Scalar>& subs) {
  return {l.space, l.c.map([&](const Scalar& x) { return x.substitute(subs); })};
}

}  // namespace sqf
