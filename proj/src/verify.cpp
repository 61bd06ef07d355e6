#include "sqf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sqf/lagrangian_cert.hpp"
#include "sqf/lsa_novikov.hpp"

#ifndef SQF_NO_OPENMP
#include <omp.h>
#endif

namespace sqf {

void VerificationPlan::validate() const {
  if (samples == 0) throw PreconditionViolated("samples per region must be at least 1");
  for (const auto& c : checks)
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end())
      throw PreconditionViolated("unknown check '" + c + "'");
}

std::vector<std::string> VerificationPlan::effective_checks() const {
  if (checks.empty()) return check_names();
  std::vector<std::string> out;
  for (const auto& c : check_names())
    if (std::find(checks.begin(), checks.end(), c) != checks.end()) out.push_back(c);
  return out;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "fail";
}

Status EntryReport::status() const {
  bool any_pass = false;
  for (const auto& c : checks) {
    if (c.status == Status::kFail) return Status::kFail;
    any_pass = any_pass || c.status == Status::kPass;
  }
  return any_pass ? Status::kPass : Status::kSkipped;
}

bool Report::ok() const {
  for (const auto& e : entries)
    if (e.status() == Status::kFail) return false;
  return true;
}

// ---------------------------------------------------------------- points

namespace {

Assignment merge(const Assignment& a, const Assignment& b) {
  Assignment r = a;
  for (const auto& [k, v] : b) r[k] = v;
  return r;
}

std::vector<Assignment> region_points(const ParamRegion& r, std::size_t n, const std::vector<std::string>& params) {
  return sample_points(r, std::max(n, r.samples.size()), params);
}

ScalarMatrix subst(ScalarMatrix m, const Assignment& at) {
  if (!at.empty())
    for (auto& x : m.a) x = x.substitute(at);
  return m;
}

ScalarMatrix subst(ScalarMatrix m, const std::map<std::size_t, Scalar>& s) {
  if (!s.empty())
    for (auto& x : m.a) x = x.substitute(s);
  return m;
}

std::string assignment_str(const Assignment& at) {
  if (at.empty()) return "{}";
  std::string s = "{";
  bool first = true;
  for (const auto& n : param_names())
    if (auto it = at.find(n); it != at.end()) {
      s += (first ? "" : ", ") + n + "=" + it->second.get_str();
      first = false;
    }
  return s + "}";
}

}  // namespace

std::vector<Assignment> entry_points(const CatalogEntry& e, std::size_t samples) {
  if (e.params.empty()) return {Assignment{}};
  return region_points(e.region, samples, e.params);
}

std::vector<Assignment> form_points(const CatalogEntry& e, const FormSpec& f, std::size_t samples) {
  std::vector<Assignment> fs{Assignment{}};
  if (f.region) {
    std::vector<std::string> ps = f.coefficients;
    fs = region_points(*f.region, samples, ps);
  }
  std::vector<Assignment> base;
  if (f.at) base = {*f.at};
  else base = entry_points(e, samples);
  bool binds = !fs.front().empty() && std::all_of(e.params.begin(), e.params.end(), [&](const std::string& p) {
    return fs.front().count(p) > 0;
  });
  if (binds) base = {Assignment{}};
  std::vector<Assignment> out;
  for (const auto& b : base)
    for (const auto& s : fs) {
      Assignment pt = merge(b, s);
      if (std::find(out.begin(), out.end(), pt) == out.end()) out.push_back(pt);
    }
  return out;
}

// ---------------------------------------------------------------- checks

namespace {

struct Fail {
  std::string detail;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Fail{what};
}

std::string triple_str(const TripleResidual& t, const SuperSpace& s) {
  return "(e" + std::to_string(t.i + 1) + ",e" + std::to_string(t.j + 1) + ",e" + std::to_string(t.k + 1) +
         ") -> " + vec_str(s, t.value);
}

void check_jacobi(const CatalogEntry& e, CheckResult& r) {
  auto l = e.lie();
  auto ac = check_anticommutativity(l);
  for (const auto& f : ac.failures) r.witnesses.push_back("anticommutativity " + triple_str(f, l.space));
  require(ac.ok, "super anti-commutativity fails" + (ac.detail.empty() ? "" : " (" + ac.detail + ")"));
  auto jr = sqf::check_jacobi(l);
  for (const auto& f : jr.failures) r.witnesses.push_back("jacobi " + triple_str(f, l.space));
  require(jr.ok, "super Jacobi identity fails");
  r.detail = "symbolic in " + std::to_string(e.params.size()) + " parameter(s)";
}

std::map<std::size_t, Scalar> form_substitutions(const CatalogEntry& e, const FormSpec& f) {
  auto subs = e.substitutions();
  if (f.region)
    for (const auto& [k, v] : f.region->equalities()) subs[k] = v;
  if (f.at)
    for (const auto& [k, v] : *f.at) subs[static_cast<std::size_t>(param_index(k))] = Scalar(v);
  return subs;
}

void check_forms(const CatalogEntry& e, std::size_t n, CheckResult& r) {
  if (e.forms.empty()) throw Fail{"__skip__no forms (verdict none)"};
  SuperSpace s = e.space();
  std::size_t d = s.dim();
  LieSuperStructure l0 = make_lie(s, e.brackets);
  std::size_t fi = 0;
  for (const auto& f : e.forms) {
    std::string tag = "form " + std::to_string(++fi) + " (" + (f.parity ? (bit(*f.parity) ? "odd" : "even") : "nh") + ")";
    auto subs = form_substitutions(e, f);
    LieSuperStructure l = subs.empty() ? l0 : substitute(l0, subs);
    ScalarMatrix v = subst(wedge_values(f.terms, s), subs);
    std::vector<ScalarMatrix> parts;
    if (f.parity) {
      try {
        wedge_form(f.terms, s, *f.parity);
      } catch (const MixedParityTerm& ex) {
        throw Fail{tag + ": " + ex.what()};
      }
      parts.push_back(v);
    } else {
      ScalarMatrix v0(d, d), v1(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) (s.parity(i) == s.parity(j) ? v0 : v1)(i, j) = v(i, j);
      require(!v0.is_zero_matrix() && !v1.is_zero_matrix(), tag + ": not genuinely non-homogeneous");
      parts = {v0, v1};
    }
    for (const auto& p : parts) {
      require(is_antisymmetric_values(s, p), tag + ": not anti-symmetric");
      auto cr = is_closed(l, p);
      if (!cr.closed)
        throw Fail{tag + ": not closed at (e" + std::to_string(cr.i + 1) + ",e" + std::to_string(cr.j + 1) + ",e" +
                   std::to_string(cr.k + 1) + "), residual " + cr.residual.str()};
    }
    Scalar dt = det(v);
    require(!dt.is_zero(), tag + ": determinant vanishes identically");
    r.witnesses.push_back(tag + " det = " + dt.str());
    for (const auto& pt : form_points(e, f, n)) {
      r.samples.push_back(pt);
      LieSuperStructure lp = substitute(l0, pt);
      ScalarMatrix vp = subst(wedge_values(f.terms, s), pt);
      for (const auto& x : vp.a) require(x.is_rational(), tag + ": sample " + assignment_str(pt) + " leaves parameters free");
      Rational dv = det(vp).to_rational();
      require(sgn(dv) != 0, tag + ": degenerate at " + assignment_str(pt));
      if (f.parity) {
        require(is_closed(lp, vp).closed, tag + ": not closed at " + assignment_str(pt));
        BilForm w = form_from_values(s, *f.parity, vp);
        require(check_superdim_constraints(s, w), tag + ": superdimension constraint fails");
      } else {
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            if (s.parity(i) != s.parity(j)) vp(i, j) = Scalar();
        ScalarMatrix vo = subst(wedge_values(f.terms, s), pt);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            if (s.parity(i) == s.parity(j)) vo(i, j) = Scalar();
        require(is_closed(lp, vp).closed && is_closed(lp, vo).closed, tag + ": not closed at " + assignment_str(pt));
      }
    }
  }
  r.detail = std::to_string(e.forms.size()) + " form(s), " + std::to_string(r.samples.size()) + " point(s)";
}

void check_qf(const CatalogEntry& e, std::size_t n, CheckResult& r) {
  LieSuperStructure l0 = make_lie(e.space(), e.brackets);
  struct Case {
    std::vector<Assignment> pts;
    Verdict v;
  };
  std::vector<Case> cases;
  if (e.verdict) cases.push_back({entry_points(e, n), *e.verdict});
  for (const auto& c : e.verdict_cases) {
    if (c.at) cases.push_back({{*c.at}, c.verdict});
    else cases.push_back({region_points(*c.region, n, e.params), c.verdict});
  }
  std::vector<std::string> got;
  for (const auto& c : cases)
    for (const auto& pt : c.pts) {
      r.samples.push_back(pt);
      auto q = quasi_frobenius_classify(substitute(l0, pt));
      if (q.verdict != c.v)
        throw Fail{"at " + assignment_str(pt) + " computed " + verdict_name(q.verdict) + ", catalog says " +
                   verdict_name(c.v)};
      got.push_back(verdict_name(q.verdict));
    }
  std::set<std::string> uniq(got.begin(), got.end());
  std::string vs;
  for (const auto& v : uniq) vs += (vs.empty() ? "" : ",") + v;
  r.detail = "verdict " + vs + " at " + std::to_string(r.samples.size()) + " point(s)";
}

const FormSpec* matching_form(const CatalogEntry& e, ExtensionKind k) {
  Parity want = k == ExtensionKind::kTStar ? Parity::kEven : Parity::kOdd;
  for (const auto& f : e.forms)
    if (f.parity && *f.parity == want) return &f;
  return nullptr;
}

std::vector<Assignment> extension_points(const ExtensionSpec& x) {
  if (x.at) return {*x.at};
  return {Assignment{}};
}

ScalarMatrix catalog_form_at(const CatalogEntry& e, const FormSpec& f, const Assignment& at) {
  auto subs = form_substitutions(e, f);
  return subst(subst(wedge_values(f.terms, e.space()), subs), at);
}

LieSuperStructure catalog_lie_at(const CatalogEntry& e, const Assignment& at) {
  auto l = e.lie();
  return at.empty() ? l : substitute(l, at);
}

std::string ext_tag(const ExtensionSpec& x) { return x.label ? *x.label : extension_kind_name(x.kind); }

void check_extension(const CatalogEntry& e, CheckResult& r) {
  if (e.extensions.empty()) throw Fail{"__skip__no extension block"};
  std::vector<std::string> notes;
  for (const auto& x : e.extensions) {
    std::string tag = ext_tag(x) + ": ";
    for (const auto& at : extension_points(x)) {
      if (!at.empty()) r.samples.push_back(at);
      BuiltExtension b = build_extension(e, x, at);
      require(is_even(b.nabla), tag + "connection is not even");
      auto tf = is_torsion_free(b.nabla);
      require(tf.ok, tag + "torsion at basis pair, residual " + vec_str(b.h.space, tf.residual));
      auto fl = is_flat(b.nabla);
      require(fl.ok, tag + "curvature does not vanish, residual " + vec_str(b.h.space, fl.residual));
      Representation rep = x.kind == ExtensionKind::kTStar ? dual_rep(b.nabla) : pi_dual_rep(b.nabla);
      require(check_representation(rep, b.h).ok, tag + "dual action is not a representation");
      auto cc = cocycle_condition(b.cocycle, b.h, b.nabla);
      require(cc.cocycle_law, tag + "module cocycle law fails");
      require(cc.cyclic, tag + "cyclic cocycle condition fails");
      const Extension& g = b.ext;
      require(check_anticommutativity(g.g).ok && sqf::check_jacobi(g.g).ok, tag + "extension fails the axioms");
      require(is_closed(g.g, g.values).closed, tag + "extension form is not closed");
      require(!det(g.values).is_zero(), tag + "extension form is degenerate");
      require(is_homogeneous_form(g.g.space, g.form), tag + "extension form has the wrong parity");
      require(is_antisymmetric_values(g.g.space, g.values), tag + "extension form is not anti-symmetric");
      require(is_lagrangian_ideal(g.g, g.ideal, g.values), tag + "dual summand is not a Lagrangian ideal");
      const FormSpec* f = matching_form(e, x.kind);
      require(f != nullptr, tag + "catalog has no form of the extension's parity");
      ScalarMatrix cv = catalog_form_at(e, *f, at);
      LieSuperStructure cl = catalog_lie_at(e, at);
      IsoReport iso;
      try {
        iso = verify_iso(b.identification, g.g, cl, &g.values, &cv);
      } catch (const NotBijective& ex) {
        throw Fail{tag + ex.what()};
      }
      if (!iso.ok)
        throw Fail{tag + "identification fails: " + iso.detail + " at (e" + std::to_string(iso.i + 1) + ",e" +
                   std::to_string(iso.j + 1) + ")"};
      std::size_t n = x.base.dim(), d = 2 * n;
      std::vector<Vec> duals, bases;
      for (std::size_t a = 0; a < n; ++a) {
        bases.push_back(b.identification.matrix.col(a));
        duals.push_back(b.identification.matrix.col(n + a));
      }
      require(SubSpace::span(d, x.ideal) == SubSpace::span(d, duals), tag + "ideal rows differ from the dual image");
      require(SubSpace::span(d, x.complement) == SubSpace::span(d, bases),
              tag + "complement rows differ from the base image");
      notes.push_back(ext_tag(x) + " ratio " + iso.ratio.str());
    }
  }
  r.witnesses = notes;
  r.detail = std::to_string(e.extensions.size()) + " extension(s): torsion-free, flat, cocycle, Lagrangian, isomorphic";
}

void compare_quotient(const QuotientResult& q, const BuiltExtension& b, const std::string& tag) {
  require(q.h.c == b.h.c, tag + "quotient bracket differs from the base bracket");
  require(q.nabla.gamma == b.nabla.gamma, tag + "quotient connection differs from the original");
}

void check_roundtrip(const CatalogEntry& e, CheckResult& r) {
  if (e.extensions.empty()) throw Fail{"__skip__no extension block"};
  for (const auto& x : e.extensions) {
    std::string tag = ext_tag(x) + ": ";
    for (const auto& at : extension_points(x)) {
      BuiltExtension b = build_extension(e, x, at);
      std::size_t n = x.base.dim(), d = 2 * n;
      std::vector<Vec> lifts;
      for (std::size_t a = 0; a < n; ++a) lifts.push_back(unit_vector(a, d));
      compare_quotient(quotient_flat_connection(b.ext.g, b.ext.values, b.ext.ideal, lifts), b, tag + "constructed side: ");
      const FormSpec* f = matching_form(e, x.kind);
      require(f != nullptr, tag + "catalog has no form of the extension's parity");
      std::vector<Vec> clifts;
      for (std::size_t a = 0; a < n; ++a) clifts.push_back(b.identification.matrix.col(a));
      compare_quotient(quotient_flat_connection(catalog_lie_at(e, at), catalog_form_at(e, *f, at),
                                                SubSpace::span(d, x.ideal), clifts),
                       b, tag + "catalog side: ");
    }
  }
  r.detail = "quotient recovers (h, nabla) on both sides";
}

void check_lagrangian(const CatalogEntry& e, std::size_t n, CheckResult& r) {
  if (!e.no_lagrangian_certificate) throw Fail{"__skip__no certificate"};
  require(!e.forms.empty(), "certificate entry has no form");
  const FormSpec& f = e.forms.front();
  auto pts = form_points(e, f, n);
  auto rep = replay_no_lagrangian_proof(*e.no_lagrangian_certificate, e.lie(), e.form_values(f), pts);
  r.samples = rep.samples;
  r.witnesses = rep.log;
  r.detail = "certificate " + rep.id + ": " + std::to_string(rep.branches) + " closed branch(es) over " +
             std::to_string(rep.samples.size()) + " point(s)";
}

ProductTable table_of(const CatalogEntry& e, const LsaSpec& s) {
  ProductTable p = make_product(e.space(), s.products);
  auto subs = e.substitutions();
  if (!subs.empty()) p.m = p.m.map([&](const Scalar& x) { return x.substitute(subs); });
  return p;
}

void check_lsa(const CatalogEntry& e, CheckResult& r) {
  LieSuperStructure l = e.lie();
  std::size_t count = 0;
  for (const auto& s : e.lsa) {
    if (s.kind == "bn") continue;
    ++count;
    ProductTable p = table_of(e, s);
    require(is_even_product(p), s.kind + ": product is not even");
    auto nv = is_novikov(p);
    for (const auto& f : nv.failures) r.witnesses.push_back(s.kind + " N/T " + triple_str(f, p.space));
    require(nv.lssa, s.kind + ": not left-symmetric");
    auto cmp = compare_brackets(induced_bracket(p), l);
    require(cmp.ok, s.kind + ": induced bracket differs from the catalog at (e" +
                        std::to_string(cmp.ok ? 0 : cmp.mismatches[0].first + 1) + ",e" +
                        std::to_string(cmp.ok ? 0 : cmp.mismatches[0].second + 1) + ")");
    if (s.kind == "novikov") {
      require(nv.equal_parity, "novikov: right multiplication is not supercommutative on equal parities");
      require(nv.mixed_parity, "novikov: the mixed-parity reading fails");
    } else {
      require(!nv.equal_parity, "lssa: table is unexpectedly Novikov");
    }
  }
  if (count == 0) throw Fail{"__skip__no novikov or lssa table"};
  r.detail = std::to_string(count) + " table(s)";
}

void check_bn(const CatalogEntry& e, CheckResult& r) {
  LieSuperStructure l = e.lie();
  std::size_t count = 0;
  for (const auto& s : e.lsa) {
    if (s.kind != "bn") continue;
    ++count;
    ProductTable p = table_of(e, s);
    require(is_even_product(p), "bn: product is not even");
    auto b = is_balinsky_novikov(p);
    r.witnesses.insert(r.witnesses.end(), b.failures.begin(), b.failures.end());
    require(b.ok, "bn: axioms fail");
    auto cmp = compare_brackets(bn_induced_bracket(p), l);
    require(cmp.ok, "bn: induced bracket differs from the catalog");
  }
  if (count == 0) throw Fail{"__skip__no bn table"};
  r.detail = std::to_string(count) + " table(s)";
}

void check_obstruction(const CatalogEntry& e, CheckResult& r) {
  if (e.id != "D10_0_1" && e.id != "D10_0_2") throw Fail{"__skip__no obstruction script"};
  auto rep = novikov_obstruction_replay(e.id, e.lie());
  for (const auto& s : rep.steps) {
    std::string line = (s.displayed ? "" : "[gap] ") + s.description;
    for (const auto& q : s.equations) line += "; " + q;
    r.witnesses.push_back(line);
  }
  require(rep.ok, "terminal witness vanishes");
  if (e.id == "D10_0_1") require(rep.terminal_coefficient == Rational(1, 2), "terminal witness is not 1/2 e3");
  r.detail = "N(e3,e4,e4) = " + rep.terminal_coefficient.get_str() + " e3; " +
             std::to_string(rep.displayed_constraints.size()) + " displayed constraint(s) verified";
}

}  // namespace

BuiltExtension build_extension(const CatalogEntry& e, const ExtensionSpec& x, const Assignment& at) {
  auto subs = e.substitutions();
  auto fix = [&](const Scalar& s) {
    Scalar t = subs.empty() ? s : s.substitute(subs);
    return at.empty() ? t : t.substitute(at);
  };
  std::size_t n = x.base.dim(), d = 2 * n;
  BuiltExtension b;
  b.h = make_lie(x.base, x.base_brackets);
  b.h.c = b.h.c.map(fix);
  b.nabla.algebra = b.h;
  b.nabla.gamma = Tensor3(n);
  for (const auto& c : x.connection)
    for (std::size_t k = 0; k < n; ++k) b.nabla.gamma(c.i, c.j, k) += fix(c.rhs[k]);
  std::vector<CocycleTerm> terms = x.cocycle;
  for (auto& t : terms) {
    t.coeff = fix(t.coeff);
    for (auto& v : t.target) v = fix(v);
  }
  b.cocycle = make_cocycle(x.kind, x.base, terms);
  try {
    b.ext = extend(x.kind, b.h, b.nabla, b.cocycle);
  } catch (const PreconditionViolated&) {
    // still build the table so the caller can report the failing ingredient
    b.ext = Extension{x.kind, {}, {}, ScalarMatrix(d, d), SubSpace(d), SubSpace(d), n};
  }
  b.identification.matrix = ScalarMatrix(d, d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t k = 0; k < d; ++k) b.identification.matrix(k, c) = fix(x.identification[c][k]);
  return b;
}

CheckResult run_check(const CatalogEntry& e, const std::string& check, std::size_t samples) {
  CheckResult r;
  r.check = check;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (check == "jacobi") check_jacobi(e, r);
    else if (check == "forms") check_forms(e, samples, r);
    else if (check == "qf-classify") check_qf(e, samples, r);
    else if (check == "extension") check_extension(e, r);
    else if (check == "roundtrip") check_roundtrip(e, r);
    else if (check == "lagrangian-cert") check_lagrangian(e, samples, r);
    else if (check == "lsa") check_lsa(e, r);
    else if (check == "bn") check_bn(e, r);
    else if (check == "novikov-obstruction") check_obstruction(e, r);
    else throw PreconditionViolated("unknown check '" + check + "'");
    r.status = Status::kPass;
  } catch (const Fail& f) {
    if (f.detail.rfind("__skip__", 0) == 0) {
      r.status = Status::kSkipped;
      r.detail = f.detail.substr(8);
    } else {
      r.status = Status::kFail;
      r.detail = f.detail;
    }
  } catch (const PreconditionViolated& ex) {
    if (std::string(ex.what()).rfind("unknown check", 0) == 0) throw;
    r.status = Status::kFail;
    r.detail = ex.what();
  } catch (const Error& ex) {
    r.status = Status::kFail;
    r.detail = ex.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

EntryReport verify_entry(const CatalogEntry& e, const VerificationPlan& plan) {
  EntryReport er{e.id, {}};
  for (const auto& c : plan.effective_checks()) er.checks.push_back(run_check(e, c, plan.samples));
  return er;
}

namespace {

std::vector<const CatalogEntry*> select(const Catalog& c, const VerificationPlan& plan) {
  plan.validate();
  std::vector<const CatalogEntry*> out;
  if (plan.entries.empty()) {
    for (const auto& e : c.entries) out.push_back(&e);
  } else {
    for (const auto& id : plan.entries) out.push_back(&c.find(id));
  }
  return out;
}

}  // namespace

Report verify_catalog(const Catalog& c, const VerificationPlan& plan) {
  auto sel = select(c, plan);
  Report r;
  r.entries.resize(sel.size());
  long count = static_cast<long>(sel.size());
#ifndef SQF_NO_OPENMP
  int threads = plan.jobs > 0 ? plan.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
  for (long i = 0; i < count; ++i) r.entries[static_cast<std::size_t>(i)] = verify_entry(*sel[static_cast<std::size_t>(i)], plan);
  return r;
}

Report verify_catalog_ref(const Catalog& c, const VerificationPlan& plan) {
  auto sel = select(c, plan);
  Report r;
  for (const auto* e : sel) r.entries.push_back(verify_entry(*e, plan));
  return r;
}

// ---------------------------------------------------------------- output

std::string report_json(const Report& r, bool timings) {
  using json = nlohmann::ordered_json;
  json es = json::array();
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& e : r.entries) {
    json cs = json::array();
    for (const auto& c : e.checks) {
      ++counts[static_cast<int>(c.status)];
      json s = json::array();
      for (const auto& at : c.samples) {
        json o = json::object();
        for (const auto& n : param_names())
          if (auto it = at.find(n); it != at.end()) o[n] = it->second.get_str();
        s.push_back(o);
      }
      json o = {{"check", c.check},   {"status", status_name(c.status)}, {"detail", c.detail},
                {"witnesses", c.witnesses}, {"samples", s}};
      if (timings) o["elapsed_ms"] = c.elapsed_ms;
      cs.push_back(o);
    }
    es.push_back({{"id", e.id}, {"status", status_name(e.status())}, {"checks", cs}});
  }
  json j = {{"schema_version", "1"},
            {"status", r.ok() ? "pass" : "fail"},
            {"summary", {{"entries", r.entries.size()}, {"pass", counts[0]}, {"fail", counts[1]}, {"skipped", counts[2]}}},
            {"entries", es}};
  return j.dump(1) + "\n";
}

std::string report_text(const Report& r, bool timings) {
  std::ostringstream os;
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& e : r.entries) {
    os << e.id << ": " << status_name(e.status()) << "\n";
    for (const auto& c : e.checks) {
      ++counts[static_cast<int>(c.status)];
      os << "  " << c.check << ": " << status_name(c.status);
      if (!c.detail.empty()) os << " - " << c.detail;
      if (timings) os << " [" << c.elapsed_ms << " ms]";
      os << "\n";
      if (c.status == Status::kFail)
        for (const auto& w : c.witnesses) os << "    " << w << "\n";
    }
  }
  os << "overall: " << (r.ok() ? "pass" : "fail") << " (" << r.entries.size() << " entries, " << counts[0]
     << " passed, " << counts[1] << " failed, " << counts[2] << " skipped)\n";
  return os.str();
}

}  // namespace sqf
