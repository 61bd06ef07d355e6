#include "sqf/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#ifndef SQF_CATALOG_DEFAULT
#define SQF_CATALOG_DEFAULT "data/catalog.json"
#endif

namespace sqf {

using json = nlohmann::ordered_json;

namespace {

const std::vector<std::pair<Relation, std::string>>& relation_table() {
  static const std::vector<std::pair<Relation, std::string>> t = {
      {Relation::kNonZero, "!=0"},     {Relation::kPositive, ">0"},     {Relation::kNegative, "<0"},
      {Relation::kNonNegative, ">=0"}, {Relation::kNonPositive, "<=0"}, {Relation::kZero, "=0"}};
  return t;
}

}  // namespace

std::string relation_name(Relation r) {
  for (const auto& [k, v] : relation_table())
    if (k == r) return v;
  return "!=0";
}

std::optional<Relation> relation_from_name(const std::string& s) {
  for (const auto& [k, v] : relation_table())
    if (v == s) return k;
  return std::nullopt;
}

bool Constraint::holds(const Assignment& at) const {
  int s = sgn(expr.evaluate(at));
  switch (rel) {
    case Relation::kNonZero: return s != 0;
    case Relation::kPositive: return s > 0;
    case Relation::kNegative: return s < 0;
    case Relation::kNonNegative: return s >= 0;
    case Relation::kNonPositive: return s <= 0;
    case Relation::kZero: return s == 0;
  }
  return false;
}

bool ParamRegion::contains(const Assignment& at) const {
  for (const auto& c : constraints) {
    try {
      if (!c.holds(at)) return false;
    } catch (const PoleAtSamplePoint&) {
      return false;
    }
  }
  return true;
}

std::vector<std::string> ParamRegion::parameters() const {
  unsigned mask = 0;
  for (const auto& c : constraints) mask |= c.expr.occurring();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < kNumParams; ++i)
    if (mask & (1u << i)) out.push_back(param_names()[i]);
  return out;
}

std::map<std::size_t, Scalar> ParamRegion::equalities() const {
  std::map<std::size_t, Scalar> subs;
  bool progress = true;
  std::vector<bool> used(constraints.size());
  while (progress) {
    progress = false;
    for (std::size_t n = 0; n < constraints.size(); ++n) {
      if (used[n] || constraints[n].rel != Relation::kZero) continue;
      Scalar e = constraints[n].expr.substitute(subs);
      if (!e.is_polynomial() || e.is_rational()) continue;
      const MultiPoly& p = e.num();
      for (std::size_t v = 0; v < kNumParams; ++v) {
        if (p.degree_in(v) != 1) continue;
        auto cs = p.coefficients_in(v);
        if (!cs[1].is_constant()) continue;
        Scalar rest(cs.count(0) ? cs[0] : MultiPoly(kNumParams), MultiPoly::constant(1, kNumParams));
        Scalar val = -rest / Scalar(cs[1].constant_value());
        std::map<std::size_t, Scalar> one{{v, val}};
        for (auto& [_, s] : subs) s = s.substitute(one);
        subs[v] = val;
        used[n] = true;
        progress = true;
        break;
      }
    }
  }
  return subs;
}

namespace {

// 0, 1, -1, 2, -2, 1/2, -1/2, 3, ... ordered by |a|+b
std::vector<Rational> rational_sequence(std::size_t count) {
  std::vector<Rational> out{Rational(0)};
  for (long s = 2; out.size() < count; ++s)
    for (long b = 1; b < s && out.size() < count; ++b) {
      long a = s - b;
      if (std::gcd(a, b) != 1) continue;
      out.emplace_back(a, b);
      out.emplace_back(-a, b);
    }
  for (auto& r : out) r.canonicalize();
  return out;
}

}  // namespace

std::vector<Assignment> sample_points(const ParamRegion& r, std::size_t n, const std::vector<std::string>& params) {
  if (n == 0) throw PreconditionViolated("sample_points needs n >= 1");
  std::set<std::string> names(params.begin(), params.end());
  for (const auto& p : r.parameters()) names.insert(p);
  std::vector<Assignment> out;
  for (const auto& s : r.samples) {
    if (out.size() >= n) break;
    if (!r.contains(s)) throw SchemaViolation("curated sample lies outside its region");
    out.push_back(s);
  }
  if (names.empty()) {
    if (out.empty()) {
      if (!r.contains({})) throw RegionExhausted("constant constraints fail");
      out.push_back({});
    }
    return out;
  }
  auto eq = r.equalities();
  std::vector<std::string> free;
  for (std::size_t i = 0; i < kNumParams; ++i)
    if (names.count(param_names()[i]) && !eq.count(i)) free.push_back(param_names()[i]);

  constexpr std::size_t kSearch = 20000;
  const auto seq = rational_sequence(64);
  std::size_t tried = 0;
  std::vector<std::size_t> idx(free.size());
  auto consider = [&]() {
    Assignment at;
    for (std::size_t k = 0; k < free.size(); ++k) at[free[k]] = seq[idx[k]];
    try {
      for (const auto& [v, s] : eq) at[param_names()[v]] = s.evaluate(at);
    } catch (const Error&) {
      return;
    }
    if (!r.contains(at)) return;
    for (const auto& o : out)
      if (o == at) return;
    out.push_back(at);
  };
  if (free.empty()) {
    consider();
  } else {
    // tuples by increasing largest index, lexicographic within a layer
    for (std::size_t level = 0; level < seq.size() && out.size() < n && tried < kSearch; ++level) {
      std::vector<std::size_t> cur(free.size(), 0);
      while (true) {
        bool on_layer = false;
        for (auto c : cur) on_layer = on_layer || c == level;
        if (on_layer) {
          idx = cur;
          ++tried;
          consider();
          if (out.size() >= n || tried >= kSearch) break;
        }
        std::size_t k = free.size();
        while (k > 0 && cur[k - 1] == level) cur[--k] = 0;
        if (k == 0) break;
        ++cur[k - 1];
      }
    }
  }
  if (out.size() < n)
    throw RegionExhausted("found " + std::to_string(out.size()) + " of " + std::to_string(n) + " sample points");
  return out;
}

// ---------------------------------------------------------------- entries

SuperSpace CatalogEntry::space() const { return standard_space(even_dim, odd_dim, id); }

LieSuperStructure CatalogEntry::lie() const {
  auto l = make_lie(space(), brackets);
  auto subs = substitutions();
  return subs.empty() ? l : substitute(l, subs);
}

ScalarMatrix CatalogEntry::form_values(const FormSpec& f) const {
  ScalarMatrix v = wedge_values(f.terms, space());
  auto subs = substitutions();
  if (!subs.empty())
    for (auto& x : v.a) x = x.substitute(subs);
  return v;
}

std::vector<Verdict> CatalogEntry::verdicts() const {
  std::vector<Verdict> out;
  if (verdict) out.push_back(*verdict);
  for (const auto& c : verdict_cases) out.push_back(c.verdict);
  return out;
}

const CatalogEntry& Catalog::find(const std::string& id) const {
  for (const auto& e : entries)
    if (e.id == id) return e;
  throw UnknownEntryId("no catalog entry named '" + id + "'");
}

std::map<int, int> Catalog::table_counts() const {
  std::map<int, int> m;
  for (const auto& e : entries) ++m[e.table];
  return m;
}

// ---------------------------------------------------------------- parsing

namespace {

struct Reader {
  std::string where;

  [[noreturn]] void schema(const std::string& what) const { throw SchemaViolation(where + ": " + what); }

  const json& need(const json& j, const char* key) const {
    if (!j.is_object() || !j.contains(key)) schema(std::string("missing field '") + key + "'");
    return j.at(key);
  }

  std::string str(const json& j, const char* key) const {
    const json& v = need(j, key);
    if (!v.is_string()) schema(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
  }

  int integer(const json& j, const char* key) const {
    const json& v = need(j, key);
    if (!v.is_number_integer()) schema(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
  }

  Scalar scalar(const json& v, const std::string& field) const {
    if (!v.is_string()) schema("field '" + field + "' must be a scalar string");
    try {
      return parse_scalar(v.get<std::string>());
    } catch (const Error& e) {
      throw ParseError(where + ", field '" + field + "': " + e.what());
    }
  }

  std::size_t index(const json& v, std::size_t d, const std::string& field) const {
    if (!v.is_number_integer()) schema("field '" + field + "' must be an integer index");
    int i = v.get<int>();
    if (i < 1 || static_cast<std::size_t>(i) > d) schema("index " + std::to_string(i) + " in '" + field + "' out of range");
    return static_cast<std::size_t>(i - 1);
  }

  Vec sparse(const json& j, std::size_t d, const std::string& field) const {
    if (!j.is_object()) schema("field '" + field + "' must be a sparse vector");
    Vec v(d);
    for (auto it = j.begin(); it != j.end(); ++it) {
      std::size_t k = 0;
      try {
        k = std::stoul(it.key());
      } catch (...) {
        schema("bad key '" + it.key() + "' in '" + field + "'");
      }
      if (k < 1 || k > d) schema("basis index " + it.key() + " in '" + field + "' out of range");
      v[k - 1] += scalar(it.value(), field);
    }
    return v;
  }

  Vec row(const json& j, std::size_t d, const std::string& field) const {
    if (!j.is_array() || j.size() != d) schema("field '" + field + "' must be a row of length " + std::to_string(d));
    Vec v;
    for (const auto& x : j) v.push_back(scalar(x, field));
    return v;
  }

  std::vector<BracketSpec> brackets(const json& j, std::size_t d, const std::string& field) const {
    if (!j.is_array()) schema("field '" + field + "' must be a list");
    std::vector<BracketSpec> out;
    for (const auto& b : j)
      out.push_back({index(need(b, "i"), d, field), index(need(b, "j"), d, field), sparse(need(b, "rhs"), d, field)});
    return out;
  }

  Assignment assignment(const json& j, const std::string& field) const {
    if (!j.is_object()) schema("field '" + field + "' must map parameters to values");
    Assignment a;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (param_index(it.key()) < 0) schema("unknown parameter '" + it.key() + "'");
      Scalar s = scalar(it.value(), field);
      if (!s.is_rational()) schema("sample values must be rational");
      a[it.key()] = s.to_rational();
    }
    return a;
  }

  ParamRegion region(const json& j) const {
    ParamRegion r;
    for (const auto& c : need(j, "constraints")) {
      auto rel = relation_from_name(str(c, "rel"));
      if (!rel) schema("unknown relation '" + str(c, "rel") + "'");
      r.constraints.push_back({scalar(need(c, "expr"), "expr"), *rel});
    }
    for (const auto& s : need(j, "samples")) {
      Assignment a = assignment(s, "samples");
      try {
        if (!r.contains(a)) schema("sample violates its region");
      } catch (const UnboundParameter&) {
        schema("sample does not bind every constrained parameter");
      }
      r.samples.push_back(a);
    }
    return r;
  }

  std::vector<WedgeTerm> terms(const json& j, std::size_t d) const {
    std::vector<WedgeTerm> out;
    for (const auto& t : j)
      out.push_back({scalar(need(t, "coeff"), "coeff"), index(need(t, "i"), d, "terms"), index(need(t, "j"), d, "terms")});
    return out;
  }

  std::vector<std::string> names(const json& j, const char* field) const {
    if (!j.is_array()) schema(std::string("field '") + field + "' must be a list");
    std::vector<std::string> out;
    for (const auto& x : j) {
      if (!x.is_string() || param_index(x.get<std::string>()) < 0) schema(std::string("bad parameter in '") + field + "'");
      out.push_back(x.get<std::string>());
    }
    return out;
  }

  Verdict verdict(const json& j) const {
    if (!j.is_string()) schema("verdict must be a string");
    auto v = verdict_from_name(j.get<std::string>());
    if (!v) schema("unknown verdict '" + j.get<std::string>() + "'");
    return *v;
  }

  ExtensionSpec extension(const json& x, std::size_t d) const {
    ExtensionSpec e;
    std::string kind = str(x, "kind");
    if (kind == "t-star") e.kind = ExtensionKind::kTStar;
    else if (kind == "pi-t-star") e.kind = ExtensionKind::kPiTStar;
    else schema("unknown extension kind '" + kind + "'");
    if (x.contains("label")) e.label = str(x, "label");
    const json& base = need(x, "base");
    e.base.name = "h";
    for (const auto& b : need(base, "basis")) {
      int p = integer(b, "parity");
      if (p != 0 && p != 1) schema("base parity must be 0 or 1");
      e.base.basis.push_back({str(b, "label"), p ? Parity::kOdd : Parity::kEven});
    }
    std::size_t n = e.base.dim();
    if (2 * n != d) schema("extension base must have half the dimension");
    if (!e.base.valid()) schema("duplicate base label");
    e.base_brackets = brackets(need(base, "brackets"), n, "base.brackets");
    e.connection = brackets(need(x, "connection"), n, "connection");
    const json& coc = need(x, "cocycle");
    e.cocycle_kind = str(coc, "kind");
    if (e.cocycle_kind != (e.kind == ExtensionKind::kTStar ? "even-alpha" : "odd-beta"))
      schema("cocycle kind does not match the extension kind");
    for (const auto& t : need(coc, "terms"))
      e.cocycle.push_back({sparse(need(t, "target"), n, "cocycle.target"), scalar(need(t, "coeff"), "coeff"),
                           index(need(t, "i"), n, "cocycle"), index(need(t, "j"), n, "cocycle")});
    const json& id = need(x, "identification");
    if (!id.is_array() || id.size() != d) schema("identification needs one column per basis vector");
    for (const auto& c : id) e.identification.push_back(sparse(c, d, "identification"));
    for (const auto& r : need(x, "ideal")) e.ideal.push_back(row(r, d, "ideal"));
    for (const auto& r : need(x, "complement")) e.complement.push_back(row(r, d, "complement"));
    if (e.ideal.size() != n || e.complement.size() != n) schema("ideal and complement need n rows each");
    if (x.contains("at")) e.at = assignment(x.at("at"), "at");
    return e;
  }
};

CatalogEntry parse_entry(const json& j, std::size_t pos) {
  Reader r{"entry " + std::to_string(pos + 1)};
  CatalogEntry e;
  e.id = r.str(j, "id");
  r.where = "entry '" + e.id + "'";
  e.name = r.str(j, "name");
  e.table = r.integer(j, "table");
  e.item = r.integer(j, "item");
  if (e.table < 1 || e.table > 6) r.schema("table must be 1..6");
  const json& sd = r.need(j, "sdim");
  if (!sd.is_array() || sd.size() != 2 || !sd[0].is_number_integer() || !sd[1].is_number_integer())
    r.schema("sdim must be [m, n]");
  e.even_dim = sd[0].get<int>();
  e.odd_dim = sd[1].get<int>();
  if (e.even_dim < 0 || e.odd_dim < 0 || e.even_dim + e.odd_dim == 0) r.schema("bad sdim");
  std::size_t d = static_cast<std::size_t>(e.even_dim + e.odd_dim);
  e.params = r.names(r.need(j, "params"), "params");
  e.brackets = r.brackets(r.need(j, "brackets"), d, "brackets");
  e.region = r.region(r.need(j, "region"));
  if (j.contains("verdict")) e.verdict = r.verdict(j.at("verdict"));
  if (j.contains("verdict_cases")) {
    for (const auto& c : j.at("verdict_cases")) {
      VerdictCase vc;
      if (c.contains("region")) vc.region = r.region(c.at("region"));
      if (c.contains("at")) vc.at = r.assignment(c.at("at"), "at");
      if (!vc.region == !vc.at) r.schema("a verdict case needs exactly one of region and at");
      vc.verdict = r.verdict(r.need(c, "verdict"));
      e.verdict_cases.push_back(vc);
    }
  }
  if (!e.verdict == e.verdict_cases.empty()) r.schema("exactly one of verdict and verdict_cases is required");
  for (const auto& f : r.need(j, "forms")) {
    FormSpec fs;
    const json& p = r.need(f, "parity");
    if (p.is_string() && p.get<std::string>() == "nh") fs.parity = std::nullopt;
    else if (p.is_number_integer() && (p.get<int>() == 0 || p.get<int>() == 1))
      fs.parity = p.get<int>() ? Parity::kOdd : Parity::kEven;
    else r.schema("form parity must be 0, 1 or \"nh\"");
    fs.terms = r.terms(r.need(f, "terms"), d);
    if (f.contains("coefficients")) fs.coefficients = r.names(f.at("coefficients"), "coefficients");
    if (f.contains("region")) fs.region = r.region(f.at("region"));
    if (f.contains("at")) fs.at = r.assignment(f.at("at"), "at");
    e.forms.push_back(fs);
  }
  if (j.contains("extensions"))
    for (const auto& x : j.at("extensions")) e.extensions.push_back(r.extension(x, d));
  if (j.contains("no_lagrangian_certificate")) e.no_lagrangian_certificate = r.str(j, "no_lagrangian_certificate");
  for (const auto& l : r.need(j, "lsa")) {
    LsaSpec s;
    s.kind = r.str(l, "kind");
    if (s.kind != "novikov" && s.kind != "lssa" && s.kind != "bn") r.schema("unknown lsa kind '" + s.kind + "'");
    s.free = r.names(r.need(l, "free"), "free");
    s.products = r.brackets(r.need(l, "products"), d, "products");
    e.lsa.push_back(s);
  }
  if (j.contains("lsa_item")) e.lsa_item = r.integer(j, "lsa_item");
  if (j.contains("note")) e.note = r.str(j, "note");

  // forms present iff some verdict is not "none"
  bool any = false;
  for (auto v : e.verdicts()) any = any || v != Verdict::kNone;
  if (any != !e.forms.empty()) r.schema("forms must be present exactly when the verdict is not none");
  if (!e.params.empty()) {
    std::size_t samples = e.region.samples.size();
    for (const auto& c : e.verdict_cases) samples = std::max(samples, c.region ? c.region->samples.size() : 1);
    if (samples < 3) r.schema("parametric entries need at least 3 samples");
  }
  return e;
}

std::size_t line_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ":" + std::to_string(line_of(text, e.byte)) + ": " + e.what());
  }
}

}  // namespace

Catalog load_catalog(const std::string& text, const std::string& source) {
  json j = parse_json(text, source);
  Reader r{source};
  Catalog c;
  c.schema_version = r.str(j, "schema_version");
  if (c.schema_version != "1") r.schema("schema_version must be \"1\"");
  c.parameters = r.names(r.need(j, "parameters"), "parameters");
  if (c.parameters != std::vector<std::string>(param_names().begin(), param_names().end()))
    r.schema("parameters must list p, q, lambda, gamma, mu, nu, delta in order");
  const json& es = r.need(j, "entries");
  if (!es.is_array()) r.schema("entries must be a list");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < es.size(); ++i) {
    c.entries.push_back(parse_entry(es[i], i));
    if (!ids.insert(c.entries.back().id).second) r.schema("duplicate id '" + c.entries.back().id + "'");
  }
  return c;
}

Catalog load_catalog(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return load_catalog(ss.str(), "<stream>");
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_catalog(ss.str(), path);
}

// ---------------------------------------------------------------- serializing

namespace {

json sparse_json(const Vec& v) {
  json o = json::object();
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) o[std::to_string(k + 1)] = v[k].str();
  return o;
}

json brackets_json(const std::vector<BracketSpec>& bs) {
  json a = json::array();
  for (const auto& b : bs) a.push_back({{"i", b.i + 1}, {"j", b.j + 1}, {"rhs", sparse_json(b.rhs)}});
  return a;
}

json assignment_json(const Assignment& at) {
  json o = json::object();
  for (const auto& n : param_names())
    if (auto it = at.find(n); it != at.end()) o[n] = Scalar(it->second).str();
  return o;
}

json region_json(const ParamRegion& r) {
  json cs = json::array(), ss = json::array();
  for (const auto& c : r.constraints) cs.push_back({{"expr", c.expr.str()}, {"rel", relation_name(c.rel)}});
  for (const auto& s : r.samples) ss.push_back(assignment_json(s));
  return {{"constraints", cs}, {"samples", ss}};
}

json terms_json(const std::vector<WedgeTerm>& ts) {
  json a = json::array();
  for (const auto& t : ts) a.push_back({{"coeff", t.coeff.str()}, {"i", t.i + 1}, {"j", t.j + 1}});
  return a;
}

json rows_json(const std::vector<Vec>& rows) {
  json a = json::array();
  for (const auto& r : rows) {
    json row = json::array();
    for (const auto& x : r) row.push_back(x.str());
    a.push_back(row);
  }
  return a;
}

json extension_json(const ExtensionSpec& e) {
  json x;
  x["kind"] = extension_kind_name(e.kind);
  if (e.label) x["label"] = *e.label;
  json basis = json::array();
  for (const auto& b : e.base.basis) basis.push_back({{"label", b.label}, {"parity", bit(b.parity)}});
  x["base"] = {{"basis", basis}, {"brackets", brackets_json(e.base_brackets)}};
  x["connection"] = brackets_json(e.connection);
  json terms = json::array();
  for (const auto& t : e.cocycle)
    terms.push_back({{"target", sparse_json(t.target)}, {"coeff", t.coeff.str()}, {"i", t.i + 1}, {"j", t.j + 1}});
  x["cocycle"] = {{"kind", e.cocycle_kind}, {"terms", terms}};
  json id = json::array();
  for (const auto& c : e.identification) id.push_back(sparse_json(c));
  x["identification"] = id;
  x["ideal"] = rows_json(e.ideal);
  x["complement"] = rows_json(e.complement);
  if (e.at) x["at"] = assignment_json(*e.at);
  return x;
}

json entry_json(const CatalogEntry& e) {
  json j;
  j["id"] = e.id;
  j["name"] = e.name;
  j["table"] = e.table;
  j["item"] = e.item;
  j["sdim"] = {e.even_dim, e.odd_dim};
  j["params"] = e.params;
  j["brackets"] = brackets_json(e.brackets);
  j["region"] = region_json(e.region);
  if (e.verdict) j["verdict"] = verdict_name(*e.verdict);
  if (!e.verdict_cases.empty()) {
    json a = json::array();
    for (const auto& c : e.verdict_cases) {
      json o;
      if (c.region) o["region"] = region_json(*c.region);
      if (c.at) o["at"] = assignment_json(*c.at);
      o["verdict"] = verdict_name(c.verdict);
      a.push_back(o);
    }
    j["verdict_cases"] = a;
  }
  json forms = json::array();
  for (const auto& f : e.forms) {
    json o;
    if (f.parity) o["parity"] = bit(*f.parity);
    else o["parity"] = "nh";
    o["terms"] = terms_json(f.terms);
    if (!f.coefficients.empty()) o["coefficients"] = f.coefficients;
    if (f.region) o["region"] = region_json(*f.region);
    if (f.at) o["at"] = assignment_json(*f.at);
    forms.push_back(o);
  }
  j["forms"] = forms;
  if (!e.extensions.empty()) {
    json a = json::array();
    for (const auto& x : e.extensions) a.push_back(extension_json(x));
    j["extensions"] = a;
  }
  if (e.no_lagrangian_certificate) j["no_lagrangian_certificate"] = *e.no_lagrangian_certificate;
  json lsa = json::array();
  for (const auto& l : e.lsa) lsa.push_back({{"kind", l.kind}, {"free", l.free}, {"products", brackets_json(l.products)}});
  j["lsa"] = lsa;
  if (e.lsa_item) j["lsa_item"] = *e.lsa_item;
  if (e.note) j["note"] = *e.note;
  return j;
}

}  // namespace

std::string serialize_catalog(const Catalog& c) {
  json j;
  j["schema_version"] = c.schema_version;
  j["parameters"] = c.parameters;
  json es = json::array();
  for (const auto& e : c.entries) es.push_back(entry_json(e));
  j["entries"] = es;
  return j.dump(1) + "\n";
}

std::string normalize_json(const std::string& text) { return parse_json(text, "<text>").dump(1) + "\n"; }

std::string default_catalog_path() {
  if (const char* env = std::getenv("SQF_CATALOG"); env && *env) return env;
  return SQF_CATALOG_DEFAULT;
}

}  // namespace sqf
