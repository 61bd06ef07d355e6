#pragma once

#include <stdexcept>
#include <string>

namespace sqf {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define SQF_ERROR(Name)                \
  struct Name : Error {                \
    using Error::Error;                \
  };

SQF_ERROR(DivisionByZero)
SQF_ERROR(UnboundParameter)
SQF_ERROR(PoleAtSamplePoint)
SQF_ERROR(ParseError)
SQF_ERROR(DimensionMismatch)
SQF_ERROR(MixedParityTerm)
SQF_ERROR(PreconditionViolated)
SQF_ERROR(DegenerateForm)
SQF_ERROR(ParametricUnsupported)
SQF_ERROR(EmptyRegion)
SQF_ERROR(RegionExhausted)
SQF_ERROR(UnknownCertificate)
SQF_ERROR(StepNotImplied)
SQF_ERROR(NonAffineExpression)
SQF_ERROR(NotBijective)
SQF_ERROR(NotStronglyPolarized)
SQF_ERROR(SchemaViolation)
SQF_ERROR(UnknownEntryId)
SQF_ERROR(NoExtensionData)

#undef SQF_ERROR

}  // namespace sqf
