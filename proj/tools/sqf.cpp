// sqf: command line front end for the superalgebra catalog.
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sqf/catalog.hpp"
#include "sqf/verify.hpp"

namespace {

using namespace sqf;

std::string dims_str(const CatalogEntry& e) {
  return "(" + std::to_string(e.even_dim) + "|" + std::to_string(e.odd_dim) + ")";
}

std::string region_str(const ParamRegion& r) {
  std::string s;
  for (const auto& c : r.constraints) s += (s.empty() ? "" : ", ") + c.expr.str() + " " + relation_name(c.rel);
  return s.empty() ? "all" : s;
}

std::string terms_str(const std::vector<WedgeTerm>& ts) {
  std::string s;
  for (const auto& t : ts) {
    std::string c = t.coeff.str();
    std::string w = "e" + std::to_string(t.i + 1) + "*^e" + std::to_string(t.j + 1) + "*";
    if (c == "1") s += (s.empty() ? "" : " + ") + w;
    else s += std::string(s.empty() ? "" : " + ") + "(" + c + ")*" + w;
  }
  return s.empty() ? "0" : s;
}

void print_brackets(std::ostream& os, const LieSuperStructure& l) {
  std::size_t d = l.space.dim();
  bool any = false;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      Vec v(d);
      for (std::size_t k = 0; k < d; ++k) v[k] = l.c(i, j, k);
      if (is_zero_vector(v)) continue;
      os << "  [" << l.space.basis[i].label << ", " << l.space.basis[j].label << "] = " << vec_str(l.space, v) << "\n";
      any = true;
    }
  if (!any) os << "  (abelian)\n";
}

void print_values(std::ostream& os, const SuperSpace& s, const ScalarMatrix& v) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!v(i, j).is_zero())
        os << "  w(" << s.basis[i].label << ", " << s.basis[j].label << ") = " << v(i, j).str() << "\n";
}

int cmd_list(const Catalog& c) {
  for (const auto& e : c.entries) {
    std::vector<std::string> vs;
    for (auto v : e.verdicts()) vs.push_back(verdict_name(v));
    std::string verdicts;
    for (const auto& v : vs) verdicts += (verdicts.empty() ? "" : "/") + v;
    std::cout << e.id << "\t" << e.name << "\ttable " << e.table << "\t" << dims_str(e) << "\t" << verdicts << "\n";
  }
  return 0;
}

int cmd_show(const Catalog& c, const std::string& id) {
  const auto& e = c.find(id);
  std::cout << e.id << ": " << e.name << "\n"
            << "table " << e.table << ", item " << e.item << ", sdim " << dims_str(e) << "\n";
  if (!e.params.empty()) {
    std::string ps;
    for (const auto& p : e.params) ps += (ps.empty() ? "" : ", ") + p;
    std::cout << "parameters: " << ps << "\nregion: " << region_str(e.region) << "\n";
  }
  std::cout << "brackets:\n";
  print_brackets(std::cout, make_lie(e.space(), e.brackets));
  if (e.verdict) std::cout << "verdict: " << verdict_name(*e.verdict) << "\n";
  for (const auto& vc : e.verdict_cases)
    std::cout << "verdict " << verdict_name(vc.verdict) << " on "
              << (vc.region ? region_str(*vc.region) : std::string("a point")) << "\n";
  for (const auto& f : e.forms)
    std::cout << "form (" << (f.parity ? (bit(*f.parity) ? "odd" : "even") : "nh") << "): " << terms_str(f.terms)
              << (f.region ? "  where " + region_str(*f.region) : "") << "\n";
  for (const auto& x : e.extensions) std::cout << "extension: " << extension_kind_name(x.kind) << "\n";
  if (e.no_lagrangian_certificate) std::cout << "certificate: " << *e.no_lagrangian_certificate << "\n";
  for (const auto& s : e.lsa) std::cout << "product table: " << s.kind << "\n";
  if (e.note) std::cout << "note: " << *e.note << "\n";
  return 0;
}

int cmd_qf(const Catalog& c, const std::string& id, std::size_t samples) {
  const auto& e = c.find(id);
  LieSuperStructure l = make_lie(e.space(), e.brackets);
  int rc = 0;
  std::vector<std::pair<Assignment, std::optional<Verdict>>> pts;
  if (e.verdict)
    for (const auto& p : entry_points(e, samples)) pts.push_back({p, e.verdict});
  for (const auto& vc : e.verdict_cases) {
    if (vc.at) pts.push_back({*vc.at, vc.verdict});
    else
      for (const auto& p : sample_points(*vc.region, std::max(samples, vc.region->samples.size()), e.params))
        pts.push_back({p, vc.verdict});
  }
  for (const auto& [pt, want] : pts) {
    auto q = quasi_frobenius_classify(substitute(l, pt));
    std::string at;
    for (const auto& [k, v] : pt) at += (at.empty() ? "" : ", ") + k + "=" + v.get_str();
    std::cout << (at.empty() ? std::string("generic") : at) << ": " << verdict_name(q.verdict) << " (closed even "
              << q.dim_even << ", closed odd " << q.dim_odd << ")";
    if (want && *want != q.verdict) {
      std::cout << "  MISMATCH, catalog says " << verdict_name(*want);
      rc = 1;
    }
    std::cout << "\n";
  }
  return rc;
}

int cmd_extend(const Catalog& c, const std::string& id) {
  const auto& e = c.find(id);
  if (e.extensions.empty()) throw NoExtensionData("entry '" + id + "' has no extension block");
  int rc = 0;
  for (const auto& x : e.extensions) {
    Assignment at = x.at ? *x.at : Assignment{};
    BuiltExtension b = build_extension(e, x, at);
    const Extension& g = b.ext;
    std::cout << extension_kind_name(x.kind) << " extension of " << x.base.name << "\n";
    if (g.g.space.dim() == 0) {
      std::cout << "  construction failed\n";
      rc = 1;
      continue;
    }
    std::cout << "brackets:\n";
    print_brackets(std::cout, g.g);
    std::cout << "form:\n";
    print_values(std::cout, g.g.space, g.values);
    std::cout << "ideal:";
    for (const auto& v : g.ideal.basis()) std::cout << " " << vec_str(g.g.space, v);
    std::cout << "\n";
    if (auto inv = inverse(b.identification.matrix)) {
      SuperSpace cat = e.space();
      std::cout << "identification:\n";
      for (std::size_t k = 0; k < cat.dim(); ++k)
        std::cout << "  " << cat.basis[k].label << " = " << vec_str(g.g.space, inv->col(k)) << "\n";
    }
    CheckResult r = run_check(e, "extension", 3);
    std::cout << "isomorphism check: " << status_name(r.status) << " - " << r.detail << "\n";
    for (const auto& w : r.witnesses) std::cout << "  " << w << "\n";
    if (r.status == Status::kFail) rc = 1;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the four-dimensional Lie superalgebra catalog"};
  app.require_subcommand(1);
  std::string catalog_path;
  app.add_option("--catalog", catalog_path, "catalog file (default: $SQF_CATALOG or the shipped catalog)");

  app.add_subcommand("list", "list entries");
  std::string id;
  auto* show = app.add_subcommand("show", "print one entry");
  show->add_option("id", id)->required();
  auto* extend = app.add_subcommand("extend", "construct the Lagrangian extension of an entry");
  extend->add_option("id", id)->required();
  std::size_t qf_samples = 3;
  auto* qf = app.add_subcommand("qf", "classify closed forms at sample points");
  qf->add_option("id", id)->required();
  qf->add_option("--samples", qf_samples)->check(CLI::PositiveNumber);

  VerificationPlan plan;
  std::string format = "text";
  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--entry", plan.entries, "entry id (repeatable)");
  verify->add_option("--check", plan.checks, "check name (repeatable)")->check(CLI::IsMember(check_names()));
  verify->add_option("--samples", plan.samples, "samples per region")->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--jobs", plan.jobs, "worker threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--timings", plan.timings, "include elapsed times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    Catalog c = load_catalog_file(catalog_path.empty() ? default_catalog_path() : catalog_path);
    if (app.got_subcommand("list")) return cmd_list(c);
    if (*show) return cmd_show(c, id);
    if (*qf) return cmd_qf(c, id, qf_samples);
    if (*extend) return cmd_extend(c, id);
    plan.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
    for (const auto& i : plan.entries) c.find(i);
    Report r = verify_catalog(c, plan);
    std::cout << (plan.format == OutputFormat::kJson ? report_json(r, plan.timings) : report_text(r, plan.timings));
    return r.exit_code();
  } catch (const sqf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
