// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "sqf/lsa_novikov.hpp"
#include "sqf/verify.hpp"

using namespace sqf;

namespace {

constexpr int kIterations = 200;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool c, const std::string& what) {
    if (!c && ok) note << "first failure: " << what << "; ";
    ok = ok && c;
  }
};

// run_check over every entry; counts passes, requires no failures and no skips outside `skippable`
Outcome all_entries(const Catalog& c, const std::string& check, std::size_t samples,
                    const std::function<bool(const CatalogEntry&)>& applicable, int* passed = nullptr) {
  Outcome o;
  int n = 0;
  for (const auto& e : c.entries) {
    CheckResult r = run_check(e, check, samples);
    if (applicable(e)) {
      o.require(r.status == Status::kPass, e.id + " " + check + ": " + r.detail);
      n += r.status == Status::kPass;
    } else {
      o.require(r.status == Status::kSkipped, e.id + " " + check + " should be skipped");
    }
  }
  if (passed) *passed = n;
  return o;
}

Scalar P(const char* s) { return parse_scalar(s); }

Outcome criterion1(const Catalog& c) {
  Outcome o;
  int n = 0;
  for (const auto& e : c.entries) {
    LieSuperStructure l = e.lie();
    o.require(check_anticommutativity(l).ok, e.id + " anti-commutativity");
    o.require(check_jacobi(l).ok, e.id + " Jacobi");
    ++n;
  }
  o.note << n << " entries, symbolic in their parameters";
  return o;
}

Outcome criterion2(const Catalog& c) {
  int n = 0;
  Outcome o = all_entries(c, "forms", 3, [](const CatalogEntry& e) { return !e.forms.empty(); }, &n);
  const auto& d10 = c.find("D10_q");
  NondegeneracyReport r = is_nondegenerate(BilForm{Parity::kOdd, d10.form_values(d10.forms[0])},
                                           {{{"q", Rational(-1)}}, {{"q", Rational(1)}}});
  o.require(r.nondegenerate, "D10_q symbolic det");
  o.require(r.det.substitute(Assignment{{"q", Rational(-1)}}).is_zero(), "D10_q det at q=-1");
  o.require(sgn(r.sample_dets[0].second) == 0 && sgn(r.sample_dets[1].second) != 0, "D10_q sample dets");
  for (const char* id : {"D10_0_1", "D10_0_2"}) {
    bool even = false, odd = false;
    for (const auto& f : c.find(id).forms) {
      even = even || f.parity == Parity::kEven;
      odd = odd || f.parity == Parity::kOdd;
    }
    o.require(even && odd, std::string(id) + " has both form parities");
  }
  o.note << n << " entries with forms; D10_q det " << r.det.str() << " vanishes only at q=-1";
  return o;
}

Outcome criterion3(const Catalog& c) {
  int n = 0;
  Outcome o = all_entries(c, "qf-classify", 3, [](const CatalogEntry&) { return true; }, &n);
  std::map<Verdict, int> counts;
  for (const auto& e : c.entries)
    for (auto v : e.verdicts()) ++counts[v];
  o.note << n << " entries; verdicts even " << counts[Verdict::kEven] << ", odd " << counts[Verdict::kOdd]
         << ", both " << counts[Verdict::kBoth] << ", nh " << counts[Verdict::kNH] << ", none "
         << counts[Verdict::kNone];
  return o;
}

Outcome criterion4(const Catalog& c) {
  int n = 0;
  Outcome o = all_entries(c, "extension", 3, [](const CatalogEntry& e) { return !e.extensions.empty(); }, &n);
  int blocks = 0;
  for (const auto& e : c.entries) blocks += static_cast<int>(e.extensions.size());
  o.require(blocks == 17, "17 constructive blocks");
  // displayed D6 intermediate values
  BuiltExtension d6 = build_extension(c.find("D6"), c.find("D6").extensions[0], {});
  Vec e1 = unit_vector(0, 2), e2 = unit_vector(1, 2);
  o.require(nabla(d6.nabla, e1, e2) == P("-1") * e2 && nabla(d6.nabla, e2, e1) == P("-1") * e2, "D6 nabla values");
  o.require(is_zero_vector(torsion(d6.nabla, e1, e2)), "D6 T(e1,e2)=0");
  o.require(nabla(d6.nabla, e1, nabla(d6.nabla, e2, e1)) == e2, "D6 R(e1,e2)e1 first term e2");
  o.require(is_zero_vector(curvature(d6.nabla, e1, e2, e1)), "D6 R(e1,e2)e1=0");
  o.require(nabla(d6.nabla, e1, nabla(d6.nabla, e2, e2)) == P("-1") * e1, "D6 R(e1,e2)e2 first term -e1");
  o.require(is_zero_vector(curvature(d6.nabla, e1, e2, e2)), "D6 R(e1,e2)e2=0");
  o.note << blocks << " extension blocks over " << n << " entries; D6 T and R vanish";
  return o;
}

Outcome criterion5(const Catalog& c) {
  int n = 0;
  Outcome o = all_entries(c, "roundtrip", 3, [](const CatalogEntry& e) { return !e.extensions.empty(); }, &n);
  o.note << n << " entries recover (h, nabla)";
  return o;
}

Outcome criterion6(const Catalog& c) {
  Outcome o;
  int n = 0;
  for (const auto& e : c.entries) {
    if (!e.no_lagrangian_certificate) continue;
    CheckResult r = run_check(e, "lagrangian-cert", 3);
    o.require(r.status == Status::kPass, e.id + ": " + r.detail);
    if (!e.params.empty()) o.require(r.samples.size() >= 3, e.id + " at >= 3 samples");
    ++n;
  }
  o.require(n == 3, "three certificates");
  o.note << n << " certificate replays";
  return o;
}

Outcome criterion7(const Catalog& c) {
  int a = 0, b = 0;
  Outcome o = all_entries(c, "lsa", 3, [](const CatalogEntry&) { return true; }, &a);
  Outcome ob = all_entries(c, "bn", 3, [](const CatalogEntry&) { return true; }, &b);
  o.require(ob.ok, ob.note.str());
  for (const char* id : {"D10_0_1", "D10_0_2"}) {
    const auto& e = c.find(id);
    ProductTable p = make_product(e.space(), e.lsa.at(0).products);
    NovikovReport r = is_novikov(p);
    o.require(e.lsa[0].kind == "lssa" && r.lssa && !r.ok, std::string(id) + " is LSSA and not Novikov");
  }
  o.note << a << " lsa and " << b << " bn entries; D10_0 tables fail Novikov";
  return o;
}

Outcome criterion8(const Catalog& c) {
  Outcome o;
  auto one = novikov_obstruction_replay("D10_0_1", c.find("D10_0_1").lie());
  auto two = novikov_obstruction_replay("D10_0_2", c.find("D10_0_2").lie());
  o.require(one.ok && one.terminal_coefficient == Rational(1, 2), "D10_0_1 terminal 1/2 e3");
  o.require(!one.displayed_constraints.empty(), "displayed constraints verified");
  o.require(two.ok && sgn(two.terminal_coefficient) != 0, "D10_0_2 terminal nonzero");
  o.note << "N(e3,e4,e4) = " << one.terminal_coefficient.get_str() << " e3 after " << one.steps.size()
         << " steps; second entry " << two.terminal_coefficient.get_str() << " e3";
  return o;
}

Outcome criterion9(const Catalog& c) {
  Outcome o;
  const auto& d6 = c.find("D6");
  SuperSpace s = d6.space();
  BilForm w6 = form_from_values(s, Parity::kOdd, d6.form_values(d6.forms[0]));
  Vec v{P("p"), P("q"), P("lambda"), P("gamma")};
  o.require(eval_form(s, w6, v, unit_vector(2, 4)) == P("-p"), "D6 w(v,e3) = -l1");
  const auto& d7 = c.find("D7_hh_1");
  Vec y{P("0"), P("0"), P("p"), P("q")};
  o.require(eval_values(d7.form_values(d7.forms[0]), y, y) == P("p^2+q^2"), "D7_hh_1 w(Y,Y) = z3^2+z4^2");
  int forms = 0;
  for (const auto& e : c.entries) {
    for (const auto& f : e.forms) {
      if (!f.parity) continue;
      for (const auto& at : form_points(e, f, 3)) {
        ScalarMatrix vals = e.form_values(f);
        for (auto& x : vals.a) x = x.substitute(at);
        BilForm b = form_from_values(e.space(), *f.parity, vals);
        if (det(vals).is_zero()) continue;
        o.require(check_superdim_constraints(e.space(), b), e.id + " superdimension");
        ++forms;
      }
    }
    for (const auto& x : e.extensions) {
      BuiltExtension b = build_extension(e, x, x.at ? *x.at : Assignment{});
      o.require(check_superdim_constraints(b.ext.g.space, b.ext.form), e.id + " extension superdimension");
      ++forms;
    }
  }
  o.note << "wedge convention reproduced; superdimension holds for " << forms << " forms";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937 g(2024);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3);
  auto rnd = [&] {
    Rational r(num(g), den(g));
    r.canonicalize();
    return Scalar(r);
  };
  auto rand_space = [&] {
    std::uniform_int_distribution<int> m(0, 4);
    int a = m(g), b = m(g);
    if (a + b == 0) a = 1;
    if (a + b > 4) b = 4 - a;
    return standard_space(a, b);
  };
  int a = 0, b = 0, cc = 0, d = 0;
  for (int it = 0; it < kIterations; ++it) {
    // (a) upsetting
    SuperSpace s = rand_space();
    Parity par = parity_of(it);
    ScalarMatrix v(s.dim(), s.dim());
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j)
        if (s.parity(i) + s.parity(j) == par) v(i, j) = rnd();
    BilForm w = form_from_values(s, par, v);
    o.require(upsetting(s, upsetting(s, w)).gram == w.gram, "upsetting involution");
    ++a;
    // (c) dual rep of a flat connection on an abelian even algebra built from commuting matrices
    std::size_t n = 1 + static_cast<std::size_t>(it) % 3;
    SuperSpace h = standard_space(static_cast<int>(n), 0);
    ScalarMatrix m(n, n);
    for (auto& x : m.a) x = rnd();
    ScalarMatrix m2 = m * m;
    Connection conn{make_lie(h, {}), Tensor3(n)};
    for (std::size_t i = 0; i < n; ++i) {
      Scalar u = rnd(), t = rnd(), r = rnd();
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) conn.gamma(i, j, k) = (j == k ? u : Scalar()) + t * m(k, j) + r * m2(k, j);
    }
    o.require(is_flat(conn).ok, "random connection is flat");
    o.require(check_representation(dual_rep(conn), conn.algebra).ok, "dual rep of flat connection");
    ++cc;
    // (d) a random associative even product: a direct sum of scaled truncated polynomial algebras
    std::size_t blocks = 1 + static_cast<std::size_t>(it) % 2, len = 2;
    ProductTable p{standard_space(static_cast<int>(blocks * len), 0), Tensor3(blocks * len)};
    for (std::size_t bl = 0; bl < blocks; ++bl) {
      Scalar lam = rnd();
      if (lam.is_zero()) lam = Scalar(1);
      for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; i + j < len; ++j) p.m(bl * len + i, bl * len + j, bl * len + i + j) = lam;
    }
    o.require(is_even_product(p) && is_left_symmetric(p).ok, "associative product is left-symmetric");
    ++d;
  }
  // (b) complements under a random anti-symmetric form, redrawn until non-degenerate
  for (int tries = 0; b < kIterations && tries < 50 * kIterations; ++tries) {
    SuperSpace s = rand_space();
    Parity par = parity_of(tries);
    std::vector<WedgeTerm> ts;
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = i; j < s.dim(); ++j)
        if (s.parity(i) + s.parity(j) == par) ts.push_back({rnd(), i, j});
    ScalarMatrix wv = wedge_values(ts, s);
    if (det(wv).is_zero()) continue;
    std::vector<Vec> gens;
    for (int k = static_cast<int>(g() % (s.dim() + 1)); k > 0; --k) {
      Vec x(s.dim());
      for (auto& c : x) c = rnd();
      gens.push_back(x);
    }
    SubSpace sub = SubSpace::span(s.dim(), gens);
    o.require(sub.dim() + orthogonal_complement(sub, wv).dim() == s.dim(), "dim S + dim S-perp");
    ++b;
  }
  o.require(a >= 100 && b >= 100 && cc >= 100 && d >= 100, "at least 100 cases each");
  o.note << a << " upsetting, " << b << " complement, " << cc << " representation, " << d << " product cases";
  return o;
}

}  // namespace

int main() {
  Catalog c;
  try {
    c = load_catalog_file(default_catalog_path());
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"axioms", [&] { return criterion1(c); }},
      {"forms", [&] { return criterion2(c); }},
      {"quasi-Frobenius verdicts", [&] { return criterion3(c); }},
      {"extensions", [&] { return criterion4(c); }},
      {"converse round trip", [&] { return criterion5(c); }},
      {"Lagrangian certificates", [&] { return criterion6(c); }},
      {"LSA tables", [&] { return criterion7(c); }},
      {"Novikov obstruction", [&] { return criterion8(c); }},
      {"conventions", [&] { return criterion9(c); }},
      {"properties", [] { return criterion10(); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << "exception: " << e.what();
    }
    failed += !o.ok;
    std::cout << "criterion " << k + 1 << " (" << criteria[k].first << "): " << (o.ok ? "PASS" : "FAIL") << " - "
              << o.note.str() << "\n";
  }
  return failed ? 1 : 0;
}
