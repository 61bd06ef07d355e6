#include "sqf/lagrangian_cert.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sqf {

namespace {

using K = CertStep::Kind;

CertStep expand(std::vector<std::string> displayed, std::vector<std::size_t> zeroed = {}) {
  CertStep s;
  s.kind = K::kExpand;
  s.displayed = std::move(displayed);
  s.zeroed = std::move(zeroed);
  return s;
}

CertStep split(std::size_t var, bool global, std::vector<CertStep> nz, std::vector<CertStep> z) {
  CertStep s;
  s.kind = K::kSplit;
  s.var = var;
  s.global = global;
  s.nonzero = std::move(nz);
  s.zero = std::move(z);
  return s;
}

CertStep member(std::size_t source, std::string expected) {
  CertStep s;
  s.kind = K::kMember;
  s.source = source;
  s.expected = std::move(expected);
  return s;
}

CertStep dim_exceeds() {
  CertStep s;
  s.kind = K::kDimExceeds;
  return s;
}

CertStep span_forced(std::string witness) {
  CertStep s;
  s.kind = K::kSpanForced;
  s.witness = std::move(witness);
  return s;
}

CertStep definite(std::vector<std::size_t> coords) {
  CertStep s;
  s.kind = K::kDefinite;
  s.coords = std::move(coords);
  return s;
}

std::map<std::string, std::vector<CertStep>> build_scripts() {
  std::map<std::string, std::vector<CertStep>> m;
  m["D7_hh_1"] = {
      expand({"x2*e2 + 1/2*x3*e3 + 1/2*x4*e4", "-x1*e2", "-1/2*x1*e3 + x3*e2", "-1/2*x1*e4 + x4*e2"}),
      split(1, true, {member(2, "e2"), member(3, "e3"), member(4, "e4"), dim_exceeds()},
            {expand({"x2*e2 + 1/2*x3*e3 + 1/2*x4*e4", "0", "x3*e2", "x4*e2"}, {1}),
             split(3, false,
                   {split(4, false, {member(3, "e2"), definite({3, 4})},
                          {member(3, "e2"), member(1, "e3"), span_forced("e3")})},
                   {split(4, false, {member(4, "e2"), member(1, "e4"), span_forced("e4")},
                          {member(0, "e2"), definite({3, 4})})})}),
  };
  m["D9_h_p"] = {
      expand({"x2*e2 + 1/2*x3*e3 - p*x3*e4 + p*x4*e3 + 1/2*x4*e4", "-x1*e2", "-1/2*x1*e3 + p*x1*e4 + x3*e2",
              "-1/2*x1*e4 - p*x1*e3 + x4*e2"}),
      split(1, true,
            {member(2, "e2"), member(3, "-1/2*e3 + p*e4"), member(4, "-p*e3 - 1/2*e4"), dim_exceeds()},
            {expand({"x2*e2 + 1/2*x3*e3 - p*x3*e4 + p*x4*e3 + 1/2*x4*e4", "0", "x3*e2", "x4*e2"}, {1}),
             split(3, false, {member(3, "e2"), definite({3, 4})},
                   {split(4, false, {member(4, "e2"), definite({3, 4})}, {member(0, "e2"), definite({3, 4})})})}),
  };
  m["C1_h_A"] = {
      expand({"x2*e2 + 1/2*x3*e3", "-x1*e2", "-1/2*x1*e3 + x3*e2", "0"}),
      split(1, true, {member(2, "e2"), member(3, "e3"), span_forced("e3")},
            {split(3, true, {member(3, "e2"), member(1, "e3"), span_forced("e3")}, {span_forced("e4")})}),
  };
  return m;
}

// "c*xJ*eK" terms; returns (k, j) -> coefficient, both 0-based
std::map<std::pair<std::size_t, std::size_t>, Scalar> parse_expansion(const std::string& s) {
  std::map<std::pair<std::size_t, std::size_t>, Scalar> out;
  std::string t;
  for (char ch : s)
    if (ch != ' ') t += ch;
  if (t == "0") return out;
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t j = i + 1;
    while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
    std::string term = t.substr(i, j - i);
    i = j;
    bool neg = false;
    if (term[0] == '+' || term[0] == '-') {
      neg = term[0] == '-';
      term = term.substr(1);
    }
    auto ep = term.rfind("*e");
    auto xp = term.rfind('x', ep);
    if (ep == std::string::npos || xp == std::string::npos) throw ParseError("bad expansion term '" + term + "'");
    std::size_t k = std::stoul(term.substr(ep + 2)) - 1;
    std::size_t col = std::stoul(term.substr(xp + 1, ep - xp - 1)) - 1;
    Scalar c(1);
    if (xp > 0) c = parse_scalar(term.substr(0, xp - 1));
    if (neg) c = -c;
    out[{k, col}] += c;
  }
  return out;
}

// "c*eK" terms
Vec parse_vector(const std::string& s, std::size_t d) {
  std::string t;
  for (char ch : s)
    if (ch != ' ') t += ch;
  Vec v(d);
  std::size_t i = 0;
  while (i < t.size()) {
    std::size_t j = i + 1;
    while (j < t.size() && t[j] != '+' && t[j] != '-') ++j;
    std::string term = t.substr(i, j - i);
    i = j;
    bool neg = false;
    if (term[0] == '+' || term[0] == '-') {
      neg = term[0] == '-';
      term = term.substr(1);
    }
    auto ep = term.rfind('e');
    if (ep == std::string::npos) throw ParseError("bad vector term '" + term + "'");
    std::size_t k = std::stoul(term.substr(ep + 1)) - 1;
    Scalar c(1);
    if (ep > 0) c = parse_scalar(term.substr(0, ep - 1));
    v.at(k) += neg ? -c : c;
  }
  return v;
}

Vec reduce_mod(const SubSpace& s, Vec v) {
  for (const auto& r : s.basis()) {
    std::size_t pc = 0;
    while (r[pc].is_zero()) ++pc;
    if (!v[pc].is_zero()) v = v - v[pc] * r;
  }
  return v;
}

std::string vname(std::size_t j) { return "x" + std::to_string(j); }

struct State {
  std::set<std::size_t> global_zero, local_zero, nonzero;  // 1-based coordinates
  bool local = false;                                       // inside a local split
  std::vector<Vec> members;
  std::string path;
};

struct Replay {
  const std::string& id;
  LieSuperStructure l;  // numeric at the sample
  ScalarMatrix values;
  CertificateReport& rep;
  std::size_t d;

  [[noreturn]] void fail(const State& st, const std::string& what) {
    throw StepNotImplied(id + " [" + st.path + "]: " + what);
  }

  bool zeroed(const State& st, std::size_t j) const {
    return st.global_zero.count(j + 1) || st.local_zero.count(j + 1);
  }

  void run(const std::vector<CertStep>& steps, State st) {
    if (steps.empty()) fail(st, "branch ends without a terminal");
    for (std::size_t n = 0; n < steps.size(); ++n) {
      const CertStep& s = steps[n];
      bool last = n + 1 == steps.size();
      switch (s.kind) {
        case K::kExpand:
          break;  // checked symbolically before the sample runs
        case K::kSplit: {
          if (!last) fail(st, "split must end its branch");
          if (s.global && st.local) fail(st, "global split inside a local case");
          State a = st, b = st;
          a.nonzero.insert(s.var);
          a.local = st.local || !s.global;
          a.path += vname(s.var) + "!=0 ";
          b.path += vname(s.var) + "=0 ";
          if (s.global) b.global_zero.insert(s.var);
          else {
            b.local_zero.insert(s.var);
            b.local = true;
          }
          run(s.nonzero, a);
          run(s.zero, b);
          return;
        }
        case K::kMember:
          do_member(s, st);
          break;
        case K::kDimExceeds: {
          std::size_t r = SubSpace::span(d, st.members).dim();
          if (r <= 2) fail(st, "members span only " + std::to_string(r) + " dimensions");
          close(st, "dim a >= " + std::to_string(r));
          break;
        }
        case K::kSpanForced:
          do_span_forced(s, st);
          break;
        case K::kDefinite:
          do_definite(s, st);
          break;
      }
      if (s.kind == K::kDimExceeds || s.kind == K::kSpanForced || s.kind == K::kDefinite) {
        if (!last) fail(st, "steps after a terminal");
        return;
      }
    }
    fail(st, "branch ends without a terminal");
  }

  void close(const State& st, const std::string& why) {
    ++rep.branches;
    rep.log.push_back(st.path + "| " + why);
  }

  void do_member(const CertStep& s, State& st) {
    if (s.source == 0 && !st.members.empty()) fail(st, "X as a source needs no prior members");
    SubSpace mem = SubSpace::span(d, st.members);
    std::vector<std::size_t> live;
    Vec col_found;
    for (std::size_t j = 0; j < d; ++j) {
      if (zeroed(st, j)) continue;
      Vec col(d);
      if (s.source == 0) col[j] = Scalar(1);
      else
        for (std::size_t k = 0; k < d; ++k) col[k] = l.c(s.source - 1, j, k);
      col = reduce_mod(mem, col);
      if (is_zero_vector(col)) continue;
      live.push_back(j);
      col_found = col;
    }
    std::string src = s.source == 0 ? "X" : "[e" + std::to_string(s.source) + ",X]";
    if (live.size() != 1) fail(st, src + " has " + std::to_string(live.size()) + " live coordinates");
    if (s.source != 0 && !st.nonzero.count(live[0] + 1))
      fail(st, src + " depends on " + vname(live[0] + 1) + ", which is not known to be nonzero");
    Vec want = parse_vector(s.expected, d);
    for (auto& x : want) x = Scalar(x.evaluate(rep.samples.back()));
    Vec want_red = reduce_mod(mem, want);
    if (is_zero_vector(want_red) || SubSpace::span(d, {want_red, col_found}).dim() != 1)
      fail(st, src + " gives " + vec_str(l.space, col_found) + ", not a multiple of " + s.expected);
    st.members.push_back(want);
  }

  SubSpace forced_span(const State& st) const {
    std::vector<Vec> gens;
    for (std::size_t j = 0; j < d; ++j)
      if (!st.global_zero.count(j + 1)) gens.push_back(unit_vector(j, d));
    return SubSpace::span(d, gens);
  }

  void do_span_forced(const CertStep& s, const State& st) {
    SubSpace mem = SubSpace::span(d, st.members);
    SubSpace a = mem;
    if (mem.dim() != 2) {
      SubSpace g = forced_span(st);
      if (g.dim() != 2) fail(st, "a is not determined");
      for (const auto& m : st.members)
        if (!g.contains(m)) fail(st, "member outside the forced span");
      a = g;
    }
    Vec w = parse_vector(s.witness, d);
    if (!a.contains(w)) fail(st, s.witness + " is not in a");
    Scalar ww = eval_values(values, w, w);
    if (ww.is_zero()) fail(st, "omega(" + s.witness + "," + s.witness + ") vanishes");
    close(st, "a = " + vec_str(l.space, a.basis()[0]) + ", " + vec_str(l.space, a.basis()[1]) + "; omega(" +
                  s.witness + "," + s.witness + ") = " + ww.str());
  }

  void do_definite(const CertStep& s, const State& st) {
    SubSpace mem = SubSpace::span(d, st.members);
    if (mem.dim() != 1) fail(st, "definite terminal needs exactly one member");
    std::vector<Vec> gens = st.members;
    for (auto c : s.coords) gens.push_back(unit_vector(c - 1, d));
    SubSpace g = forced_span(st);
    if (!(SubSpace::span(d, gens) == g) || g.dim() != 1 + s.coords.size())
      fail(st, "members and the listed coordinates do not fill the forced span");
    std::size_t n = s.coords.size();
    std::vector<std::vector<Scalar>> sym(n, std::vector<Scalar>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t i = s.coords[a] - 1, j = s.coords[b] - 1;
        sym[a][b] = (values(i, j) + values(j, i)) * Scalar(Rational(1, 2));
      }
    // leading minors all positive, or alternating from negative
    int sign = 0;
    for (std::size_t m = 1; m <= n; ++m) {
      std::vector<std::vector<Scalar>> sub(m, std::vector<Scalar>(m));
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) sub[a][b] = sym[a][b];
      Rational dm = det_laplace(sub, Scalar(1)).to_rational();
      int sg = sgn(dm);
      int want = m == 1 ? sg : (sign > 0 ? 1 : (m % 2 ? -1 : 1));
      if (sg == 0 || sg != want) fail(st, "omega is not definite on the listed coordinates");
      if (m == 1) sign = sg;
    }
    close(st, std::string("omega definite on the complement of ") + vec_str(l.space, st.members[0]));
  }
};

void check_expansions(const std::string& id, const std::vector<CertStep>& steps, const LieSuperStructure& l) {
  std::size_t d = l.space.dim();
  for (const auto& s : steps) {
    if (s.kind == K::kSplit) {
      check_expansions(id, s.nonzero, l);
      check_expansions(id, s.zero, l);
      continue;
    }
    if (s.kind != K::kExpand) continue;
    if (s.displayed.size() != d) throw StepNotImplied(id + ": expansion needs one line per basis vector");
    for (std::size_t i = 0; i < d; ++i) {
      auto shown = parse_expansion(s.displayed[i]);
      for (std::size_t j = 0; j < d; ++j) {
        bool gone = std::find(s.zeroed.begin(), s.zeroed.end(), j + 1) != s.zeroed.end();
        for (std::size_t k = 0; k < d; ++k) {
          auto it = shown.find({k, j});
          Scalar want = it == shown.end() ? Scalar() : it->second;
          if (gone && !want.is_zero()) throw StepNotImplied(id + ": expansion mentions a zeroed coordinate");
          if (!gone && want != l.c(i, j, k))
            throw StepNotImplied(id + ": [e" + std::to_string(i + 1) + ",X] coefficient of " + vname(j + 1) + "*e" +
                                 std::to_string(k + 1) + " is " + l.c(i, j, k).str() + ", displayed " + want.str());
        }
      }
    }
  }
}

}  // namespace

const std::vector<CertStep>& lagrangian_certificate_script(const std::string& id) {
  static const auto scripts = build_scripts();
  auto it = scripts.find(id);
  if (it == scripts.end()) throw UnknownCertificate("no Lagrangian certificate named " + id);
  return it->second;
}

CertificateReport replay_no_lagrangian_proof(const std::string& id, const LieSuperStructure& l,
                                             const ScalarMatrix& values, const std::vector<Assignment>& samples) {
  const auto& steps = lagrangian_certificate_script(id);
  if (l.space.dim() != 4 || l.space.sdim() != std::pair<int, int>{2, 2})
    throw DimensionMismatch("certificates are written for sdim 2|2");
  check_expansions(id, steps, l);
  CertificateReport rep;
  rep.id = id;
  std::vector<Assignment> pts = samples.empty() ? std::vector<Assignment>{Assignment{}} : samples;
  for (const auto& at : pts) {
    rep.samples.push_back(at);
    LieSuperStructure ln = substitute(l, at);
    ScalarMatrix vn = values;
    for (auto& x : vn.a) x = Scalar(x.evaluate(at));
    for (auto& x : ln.c.v) x = Scalar(x.evaluate(at));
    if (det(vn).is_zero()) throw PreconditionViolated(id + ": form is degenerate at a sample");
    Replay r{id, ln, vn, rep, 4};
    r.run(steps, State{});
  }
  rep.ok = true;
  return rep;
}

}  // namespace sqf
