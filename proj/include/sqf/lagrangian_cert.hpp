#pragma once

#include <string>
#include <vector>

#include "sqf/lie_super.hpp"

namespace sqf {

// One step of a case analysis on an arbitrary nonzero X = sum x_j e_j in a 2-dimensional ideal a.
struct CertStep {
  enum class Kind { kExpand, kSplit, kMember, kDimExceeds, kSpanForced, kDefinite };
  Kind kind = Kind::kExpand;

  // expand: displayed [e_i,X] per i (1-based), terms "c*xJ*eK"; zeroed coordinates omitted
  std::vector<std::string> displayed;
  std::vector<std::size_t> zeroed;

  // split on x_var; a global split's nonzero branch applies to every element of a
  std::size_t var = 0;
  bool global = false;
  std::vector<CertStep> nonzero, zero;

  // member: source 0 is X itself, otherwise [e_source, X]; expected vector in e-coordinates
  std::size_t source = 0;
  std::string expected;

  // span-forced witness, definite coordinates
  std::string witness;
  std::vector<std::size_t> coords;
};

struct CertificateReport {
  std::string id;
  bool ok = false;
  std::size_t branches = 0;  // closed leaves per sample
  std::vector<Assignment> samples;
  std::vector<std::string> log;
};

const std::vector<CertStep>& lagrangian_certificate_script(const std::string& id);

// l and values are symbolic; the expansions are compared symbolically, the rest runs at every sample.
// UnknownCertificate for an unknown id, StepNotImplied when a step does not follow.
CertificateReport replay_no_lagrangian_proof(const std::string& id, const LieSuperStructure& l,
                                             const ScalarMatrix& values, const std::vector<Assignment>& samples);

}  // namespace sqf
