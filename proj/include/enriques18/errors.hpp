#pragma once

#include <stdexcept>
#include <string>

namespace enriques18 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ENRIQUES18_DEFINE_ERROR(Name) \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  }

ENRIQUES18_DEFINE_ERROR(InvalidRank);
ENRIQUES18_DEFINE_ERROR(InvalidConfiguration);
ENRIQUES18_DEFINE_ERROR(LabelingMismatch);
ENRIQUES18_DEFINE_ERROR(DivisionByZero);
ENRIQUES18_DEFINE_ERROR(IncompatibleOrders);
ENRIQUES18_DEFINE_ERROR(DegenerateLocalType);
ENRIQUES18_DEFINE_ERROR(BudgetViolation);
ENRIQUES18_DEFINE_ERROR(UnsupportedIndex);
ENRIQUES18_DEFINE_ERROR(UnsupportedCombination);
ENRIQUES18_DEFINE_ERROR(UnknownCurveName);
ENRIQUES18_DEFINE_ERROR(GoldenFileMissing);
ENRIQUES18_DEFINE_ERROR(MalformedGolden);

#undef ENRIQUES18_DEFINE_ERROR

}  // namespace enriques18
