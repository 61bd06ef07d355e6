#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqf/connect_extend.hpp"
#include "sqf/lie_super.hpp"

namespace sqf {

enum class Relation { kNonZero, kPositive, kNegative, kNonNegative, kNonPositive, kZero };
std::string relation_name(Relation r);  // "!=0", ">0", ...
std::optional<Relation> relation_from_name(const std::string& s);

struct Constraint {
  Scalar expr;
  Relation rel = Relation::kNonZero;
  bool holds(const Assignment& at) const;  // exact; PoleAtSamplePoint propagates
};

struct ParamRegion {
  std::vector<Constraint> constraints;
  std::vector<Assignment> samples;

  bool contains(const Assignment& at) const;
  // parameters occurring in the constraints, in param_names() order
  std::vector<std::string> parameters() const;
  // linear "=0" constraints solved for one parameter each
  std::map<std::size_t, Scalar> equalities() const;
};

// curated samples first, then a fixed enumeration of rationals filtered by the constraints
std::vector<Assignment> sample_points(const ParamRegion& r, std::size_t n, const std::vector<std::string>& params = {});

struct FormSpec {
  std::optional<Parity> parity;  // empty for a non-homogeneous form
  std::vector<WedgeTerm> terms;  // 0-based indices
  std::vector<std::string> coefficients;
  std::optional<ParamRegion> region;
  std::optional<Assignment> at;
};

struct VerdictCase {
  std::optional<ParamRegion> region;
  std::optional<Assignment> at;
  Verdict verdict = Verdict::kNone;
};

struct ExtensionSpec {
  ExtensionKind kind = ExtensionKind::kTStar;
  std::optional<std::string> label;
  SuperSpace base;
  std::vector<BracketSpec> base_brackets;
  std::vector<BracketSpec> connection;  // nabla_{u_i} u_j
  std::string cocycle_kind;             // "even-alpha" or "odd-beta"
  std::vector<CocycleTerm> cocycle;
  std::vector<Vec> identification;  // images of u_1..u_n, duals.. in catalog coordinates
  std::vector<Vec> ideal, complement;
  std::optional<Assignment> at;
};

struct LsaSpec {
  std::string kind;  // novikov, lssa, bn
  std::vector<std::string> free;
  std::vector<BracketSpec> products;
};

struct CatalogEntry {
  std::string id, name;
  int table = 0, item = 0;
  int even_dim = 0, odd_dim = 0;
  std::vector<std::string> params;
  std::vector<BracketSpec> brackets;
  ParamRegion region;
  std::optional<Verdict> verdict;
  std::vector<VerdictCase> verdict_cases;
  std::vector<FormSpec> forms;
  std::vector<ExtensionSpec> extensions;
  std::optional<std::string> no_lagrangian_certificate;
  std::vector<LsaSpec> lsa;
  std::optional<int> lsa_item;
  std::optional<std::string> note;

  SuperSpace space() const;
  // brackets with the region's linear equalities substituted
  LieSuperStructure lie() const;
  std::map<std::size_t, Scalar> substitutions() const { return region.equalities(); }
  ScalarMatrix form_values(const FormSpec& f) const;
  // the declared verdicts: every case, or the single entry verdict
  std::vector<Verdict> verdicts() const;
};

struct Catalog {
  std::string schema_version = "1";
  std::vector<std::string> parameters;
  std::vector<CatalogEntry> entries;

  const CatalogEntry& find(const std::string& id) const;  // UnknownEntryId
  std::map<int, int> table_counts() const;
};

// ParseError with line and field, SchemaViolation naming the invariant
Catalog load_catalog(std::istream& in);
Catalog load_catalog(const std::string& text, const std::string& source);
Catalog load_catalog_file(const std::string& path);

std::string serialize_catalog(const Catalog& c);
// re-emits any JSON text in the catalog's layout
std::string normalize_json(const std::string& text);

// SQF_CATALOG if set, else the compiled-in path
std::string default_catalog_path();

}  // namespace sqf
