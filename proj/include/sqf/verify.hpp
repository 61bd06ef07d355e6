#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqf/catalog.hpp"

namespace sqf {

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {"jacobi", "forms",  "qf-classify", "extension",          "roundtrip",
                                                 "lagrangian-cert", "lsa", "bn", "novikov-obstruction"};
  return names;
}

enum class OutputFormat { kText, kJson };

struct VerificationPlan {
  std::vector<std::string> entries;  // empty means all
  std::vector<std::string> checks;   // empty means all
  std::size_t samples = 3;
  OutputFormat format = OutputFormat::kText;
  int jobs = 0;  // 0: runtime default
  bool timings = false;

  // PreconditionViolated on unknown check names or samples == 0
  void validate() const;
  std::vector<std::string> effective_checks() const;
};

enum class Status { kPass, kFail, kSkipped };
std::string status_name(Status s);

struct CheckResult {
  std::string check;
  Status status = Status::kPass;
  std::string detail;
  std::vector<std::string> witnesses;
  std::vector<Assignment> samples;
  double elapsed_ms = 0;
};

struct EntryReport {
  std::string id;
  std::vector<CheckResult> checks;
  Status status() const;
};

struct Report {
  std::vector<EntryReport> entries;
  bool ok() const;
  int exit_code() const { return ok() ? 0 : 1; }
};

// one entry, checks in plan order
EntryReport verify_entry(const CatalogEntry& e, const VerificationPlan& plan);
CheckResult run_check(const CatalogEntry& e, const std::string& check, std::size_t samples);

// entries in parallel; report order follows the catalog
Report verify_catalog(const Catalog& c, const VerificationPlan& plan);
// serial reference
Report verify_catalog_ref(const Catalog& c, const VerificationPlan& plan);

std::string report_json(const Report& r, bool timings = false);
std::string report_text(const Report& r, bool timings = false);

// points for a form: entry samples (or its at) merged with the form's own samples
std::vector<Assignment> form_points(const CatalogEntry& e, const FormSpec& f, std::size_t samples);
std::vector<Assignment> entry_points(const CatalogEntry& e, std::size_t samples);

struct BuiltExtension {
  LieSuperStructure h;
  Connection nabla;
  ModuleCocycle cocycle;
  Extension ext;
  LinearMap identification;
};
// assembles the extension block at a point (or symbolically for an empty assignment)
BuiltExtension build_extension(const CatalogEntry& e, const ExtensionSpec& x, const Assignment& at);

}  // namespace sqf
