#include "sqf/connect_extend.hpp"

namespace sqf {

namespace {

Scalar sgn_scalar(int k) { return Scalar(sgn_pow(k)); }

Vec nabla_basis(const Connection& c, std::size_t i, std::size_t j) {
  std::size_t d = c.gamma.d;
  Vec v(d);
  for (std::size_t k = 0; k < d; ++k) v[k] = c.gamma(i, j, k);
  return v;
}

Vec torsion_basis(const Connection& c, std::size_t i, std::size_t j) {
  const auto& s = c.algebra.space;
  std::size_t d = s.dim();
  Vec r = nabla_basis(c, i, j) - sgn_scalar(bit(s.parity(i)) * bit(s.parity(j))) * nabla_basis(c, j, i);
  return r - bracket(c.algebra, unit_vector(i, d), unit_vector(j, d));
}

Vec curvature_basis(const Connection& c, std::size_t i, std::size_t j, std::size_t k) {
  const auto& s = c.algebra.space;
  std::size_t d = s.dim();
  Vec x = unit_vector(i, d), y = unit_vector(j, d), z = unit_vector(k, d);
  Vec a = nabla(c, x, nabla(c, y, z));
  Vec b = nabla(c, y, nabla(c, x, z));
  Vec e = nabla(c, bracket(c.algebra, x, y), z);
  return a - sgn_scalar(bit(s.parity(i)) * bit(s.parity(j))) * b - e;
}

}  // namespace

Vec nabla(const Connection& c, const Vec& x, const Vec& y) { return apply_tensor(c.gamma, x, y); }

bool is_even(const Connection& c) {
  const auto& s = c.algebra.space;
  std::size_t d = s.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!c.gamma(i, j, k).is_zero() && s.parity(i) + s.parity(j) != s.parity(k)) return false;
  return true;
}

Vec torsion(const Connection& c, const Vec& x, const Vec& y) {
  std::size_t d = c.gamma.d;
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!x[i].is_zero() && !y[j].is_zero()) out = out + (x[i] * y[j]) * torsion_basis(c, i, j);
  return out;
}

Vec curvature(const Connection& c, const Vec& x, const Vec& y, const Vec& z) {
  std::size_t d = c.gamma.d;
  Vec out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!x[i].is_zero() && !y[j].is_zero() && !z[k].is_zero())
          out = out + (x[i] * y[j] * z[k]) * curvature_basis(c, i, j, k);
  return out;
}

ConnectionReport is_torsion_free(const Connection& c) {
  std::size_t d = c.gamma.d;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vec t = torsion_basis(c, i, j);
      if (!is_zero_vector(t)) return {false, {i, j}, t};
    }
  return {};
}

ConnectionReport is_flat(const Connection& c) {
  std::size_t d = c.gamma.d;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec r = curvature_basis(c, i, j, k);
        if (!is_zero_vector(r)) return {false, {i, j, k}, r};
      }
  return {};
}

Representation dual_rep(const Connection& c) {
  const auto& s = c.algebra.space;
  std::size_t n = s.dim();
  Representation r;
  r.module.name = s.name + "*";
  for (const auto& b : s.basis) r.module.basis.push_back({b.label + "*", b.parity});
  for (std::size_t a = 0; a < n; ++a) {
    ScalarMatrix m(n, n);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& g = c.gamma(a, k, b);
        if (g.is_zero()) continue;
        m(k, b) = sgn_pow(bit(s.parity(a)) * bit(s.parity(b))) > 0 ? -g : g;
      }
    r.action.push_back(std::move(m));
  }
  return r;
}

Representation pi_dual_rep(const Connection& c) {
  Representation r = dual_rep(c);
  r.module = parity_shift(r.module);
  const auto& s = c.algebra.space;
  for (std::size_t a = 0; a < s.dim(); ++a)
    if (s.parity(a) == Parity::kOdd)
      for (auto& x : r.action[a].a) x = -x;
  return r;
}

RepresentationReport check_representation(const Representation& r, const LieSuperStructure& l) {
  const auto& s = l.space;
  std::size_t d = s.dim(), m = r.module.dim();
  RepresentationReport rep;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (!r.action[i](a, b).is_zero() && r.module.parity(a) != r.module.parity(b) + s.parity(i)) {
          rep.ok = rep.parity_ok = false;
          rep.i = i;
          return rep;
        }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ScalarMatrix lhs(m, m);
      for (std::size_t k = 0; k < d; ++k) {
        const Scalar& ck = l.c(i, j, k);
        if (ck.is_zero()) continue;
        for (std::size_t n = 0; n < lhs.a.size(); ++n) lhs.a[n] += ck * r.action[k].a[n];
      }
      ScalarMatrix ab = r.action[i] * r.action[j], ba = r.action[j] * r.action[i];
      Scalar sg = sgn_scalar(bit(s.parity(i)) * bit(s.parity(j)));
      for (std::size_t n = 0; n < lhs.a.size(); ++n)
        if (!(lhs.a[n] - ab.a[n] + sg * ba.a[n]).is_zero()) return {false, i, j, true};
    }
  return rep;
}

std::string extension_kind_name(ExtensionKind k) { return k == ExtensionKind::kTStar ? "t-star" : "pi-t-star"; }

ModuleCocycle make_cocycle(ExtensionKind kind, const SuperSpace& base, const std::vector<CocycleTerm>& terms) {
  std::size_t n = base.dim();
  ModuleCocycle a{kind, std::vector<std::vector<Vec>>(n, std::vector<Vec>(n, Vec(n)))};
  for (const auto& t : terms) {
    ScalarMatrix v = wedge_values({{t.coeff, t.i, t.j}}, base);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (!v(x, y).is_zero()) a.values[x][y] = a.values[x][y] + v(x, y) * t.target;
  }
  return a;
}

namespace {

Vec cocycle_apply(const ModuleCocycle& a, const Vec& x, std::size_t k) {
  std::size_t n = a.values.size();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i)
    if (!x[i].is_zero()) out = out + x[i] * a.values[i][k];
  return out;
}

Vec cocycle_apply(const ModuleCocycle& a, std::size_t i, const Vec& y) {
  std::size_t n = a.values.size();
  Vec out(n);
  for (std::size_t k = 0; k < n; ++k)
    if (!y[k].is_zero()) out = out + y[k] * a.values[i][k];
  return out;
}

}  // namespace

CocycleReport cocycle_condition(const ModuleCocycle& a, const LieSuperStructure& l, const Connection& c) {
  const auto& s = l.space;
  std::size_t n = s.dim();
  Representation rep = a.target == ExtensionKind::kTStar ? dual_rep(c) : pi_dual_rep(c);
  int shift = a.target == ExtensionKind::kTStar ? 0 : 1;
  CocycleReport r;
  for (std::size_t i = 0; i < n && r.cocycle_law; ++i)
    for (std::size_t j = 0; j < n && r.cocycle_law; ++j)
      for (std::size_t k = 0; k < n && r.cocycle_law; ++k) {
        int pi = bit(s.parity(i)), pj = bit(s.parity(j)), pk = bit(s.parity(k));
        Vec ei = unit_vector(i, n), ej = unit_vector(j, n), ek = unit_vector(k, n);
        Vec res = cocycle_apply(a, i, bracket(l, ej, ek)) + rep.action[i].apply(a.values[j][k]);
        res = res - cocycle_apply(a, bracket(l, ei, ej), k);
        res = res + sgn_scalar((pi + pj + shift) * pk) * rep.action[k].apply(a.values[i][j]);
        Vec t = cocycle_apply(a, j, bracket(l, ei, ek)) + rep.action[j].apply(a.values[i][k]);
        res = res - sgn_scalar(pi * pj) * t;
        if (!is_zero_vector(res)) {
          r.cocycle_law = false;
          r.witness = {i, j, k};
        }
      }
  for (std::size_t u = 0; u < n && r.cyclic; ++u)
    for (std::size_t v = 0; v < n && r.cyclic; ++v)
      for (std::size_t w = 0; w < n && r.cyclic; ++w) {
        int pu = bit(s.parity(u)), pv = bit(s.parity(v)), pw = bit(s.parity(w));
        Scalar sum = sgn_scalar(pu * pw) * a.values[u][v][w] + sgn_scalar(pv * pu) * a.values[v][w][u] +
                     sgn_scalar(pw * pv) * a.values[w][u][v];
        if (!sum.is_zero()) {
          r.cyclic = false;
          r.witness = {u, v, w};
        }
      }
  return r;
}

Extension extend(ExtensionKind kind, const LieSuperStructure& h, const Connection& c, const ModuleCocycle& a) {
  if (!is_even(c)) throw PreconditionViolated("connection is not even");
  if (!is_torsion_free(c).ok) throw PreconditionViolated("connection has torsion");
  if (!is_flat(c).ok) throw PreconditionViolated("connection is not flat");
  if (a.target != kind) throw PreconditionViolated("cocycle targets the other module");
  auto cr = cocycle_condition(a, h, c);
  if (!cr.cocycle_law) throw PreconditionViolated("cocycle law fails");
  if (!cr.cyclic) throw PreconditionViolated("cyclic cocycle condition fails");

  const auto& s = h.space;
  std::size_t n = s.dim(), d = 2 * n;
  Representation rep = kind == ExtensionKind::kTStar ? dual_rep(c) : pi_dual_rep(c);
  SuperSpace gs{s.name + (kind == ExtensionKind::kTStar ? "+T*" : "+PiT*"), s.basis};
  for (const auto& b : rep.module.basis) gs.basis.push_back(b);

  Extension ext{kind, {gs, Tensor3(d)}, {}, ScalarMatrix(d, d), SubSpace(d), SubSpace(d), n};
  Tensor3& t = ext.g.c;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t k = 0; k < n; ++k) t(x, y, k) = h.c(x, y, k);
      for (std::size_t m = 0; m < n; ++m) t(x, y, n + m) = a.values[x][y][m];
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& val = rep.action[x](k, b);
        if (val.is_zero()) continue;
        t(x, n + b, n + k) = val;
        int sg = sgn_pow(bit(gs.parity(x)) * bit(gs.parity(n + b)));
        t(n + b, x, n + k) = sg > 0 ? -val : val;
      }
  for (std::size_t x = 0; x < n; ++x) {
    ext.values(n + x, x) = Scalar(1);
    if (kind == ExtensionKind::kTStar) ext.values(x, n + x) = Scalar(-sgn_pow(bit(s.parity(x))));
    else ext.values(x, n + x) = Scalar(-1);
  }
  Parity fp = kind == ExtensionKind::kTStar ? Parity::kEven : Parity::kOdd;
  ext.form = form_from_values(gs, fp, ext.values);
  std::vector<Vec> duals, bases;
  for (std::size_t x = 0; x < n; ++x) {
    bases.push_back(unit_vector(x, d));
    duals.push_back(unit_vector(n + x, d));
  }
  ext.ideal = SubSpace::span(d, duals);
  ext.complement = SubSpace::span(d, bases);
  return ext;
}

Extension t_star_extend(const LieSuperStructure& h, const Connection& c, const ModuleCocycle& alpha) {
  return extend(ExtensionKind::kTStar, h, c, alpha);
}

Extension pi_t_star_extend(const LieSuperStructure& h, const Connection& c, const ModuleCocycle& beta) {
  return extend(ExtensionKind::kPiTStar, h, c, beta);
}

QuotientResult quotient_flat_connection(const LieSuperStructure& g, const ScalarMatrix& values, const SubSpace& a,
                                        const std::vector<Vec>& lifts) {
  const auto& s = g.space;
  std::size_t d = s.dim(), n = lifts.size();
  if (a.dim() + n != d) throw NotStronglyPolarized("dimensions of ideal and complement do not add up");
  if (!is_lagrangian_ideal(g, a, values)) throw NotStronglyPolarized("the ideal is not Lagrangian");
  SubSpace nsub = SubSpace::span(d, lifts);
  if (nsub.dim() != n) throw NotStronglyPolarized("lifts are dependent");
  for (const auto& x : lifts)
    for (const auto& y : lifts)
      if (!eval_values(values, x, y).is_zero()) throw NotStronglyPolarized("complement is not isotropic");
  std::vector<Parity> lp;
  for (const auto& x : lifts) {
    Parity p;
    if (!is_homogeneous(s, x, &p)) throw NotStronglyPolarized("complement basis is not homogeneous");
    lp.push_back(p);
  }
  auto arows = a.basis();
  ScalarMatrix full(d, d);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t t = 0; t < d; ++t) full(t, k) = lifts[k][t];
  for (std::size_t m = 0; m < arows.size(); ++m)
    for (std::size_t t = 0; t < d; ++t) full(t, n + m) = arows[m][t];
  if (det(full).is_zero()) throw NotStronglyPolarized("complement meets the ideal");

  SuperSpace hs{"h", {}};
  for (std::size_t k = 0; k < n; ++k) hs.basis.push_back({"u" + std::to_string(k + 1), lp[k]});
  QuotientResult q{{hs, Tensor3(n)}, {}};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto sol = solve(full, bracket(g, lifts[x], lifts[y]));
      for (std::size_t k = 0; k < n; ++k) q.h.c(x, y, k) = (*sol)[k];
    }
  q.nabla.algebra = q.h;
  q.nabla.gamma = Tensor3(n);
  ScalarMatrix pair(arows.size(), n);
  for (std::size_t r = 0; r < arows.size(); ++r)
    for (std::size_t k = 0; k < n; ++k) pair(r, k) = eval_values(values, lifts[k], arows[r]);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Vec rhs(arows.size());
      Scalar sg(sgn_pow(bit(lp[x]) * bit(lp[y])));
      for (std::size_t r = 0; r < arows.size(); ++r)
        rhs[r] = -sg * eval_values(values, lifts[y], bracket(g, lifts[x], arows[r]));
      auto sol = solve(pair, rhs);
      if (!sol) throw NotStronglyPolarized("pairing between complement and ideal is singular");
      for (std::size_t k = 0; k < n; ++k) q.nabla.gamma(x, y, k) = (*sol)[k];
    }
  return q;
}

IsoReport verify_iso(const LinearMap& f, const LieSuperStructure& g1, const LieSuperStructure& g2,
                     const ScalarMatrix* values1, const ScalarMatrix* values2) {
  std::size_t d = g1.space.dim();
  if (f.matrix.rows != g2.space.dim() || f.matrix.cols != d) throw DimensionMismatch("iso shape");
  if (f.matrix.rows != f.matrix.cols || det(f.matrix).is_zero()) throw NotBijective("identification is singular");
  IsoReport r;
  if (f.parity != Parity::kEven || !f.respects_parity(g1.space, g2.space)) {
    r.ok = r.parity_ok = false;
    r.detail = "identification does not preserve parity";
    return r;
  }
  for (std::size_t i = 0; i < d && r.bracket_ok; ++i)
    for (std::size_t j = 0; j < d && r.bracket_ok; ++j) {
      Vec lhs = f.matrix.apply(bracket(g1, unit_vector(i, d), unit_vector(j, d)));
      Vec rhs = bracket(g2, f.matrix.col(i), f.matrix.col(j));
      if (lhs != rhs) {
        r.ok = r.bracket_ok = false;
        r.i = i;
        r.j = j;
        r.detail = "bracket mismatch";
      }
    }
  if (!r.ok || !values1 || !values2) return r;
  ScalarMatrix p = f.matrix.transpose() * (*values2) * f.matrix;
  bool have = false;
  for (std::size_t n = 0; n < p.a.size(); ++n) {
    const Scalar& w = values1->a[n];
    if (w.is_zero()) continue;
    if (!have) {
      r.ratio = p.a[n] / w;
      have = true;
    }
    break;
  }
  for (std::size_t n = 0; n < p.a.size(); ++n)
    if (p.a[n] != r.ratio * values1->a[n]) {
      r.ok = r.form_ok = false;
      r.detail = "forms are not proportional";
      return r;
    }
  if (!have || r.ratio.is_zero()) {
    r.ok = r.form_ok = false;
    r.detail = "zero form ratio";
  }
  return r;
}

}  // namespace sqf
