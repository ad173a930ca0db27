#pragma once

#include <stdexcept>
#include <string>

namespace corners {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define CORNERS_DEFINE_ERROR(Name)              \
  class Name : public Error {                   \
   public:                                      \
    using Error::Error;                         \
  }

CORNERS_DEFINE_ERROR(InvalidModel);
CORNERS_DEFINE_ERROR(PointOutsideModel);
CORNERS_DEFINE_ERROR(ModelMismatch);
CORNERS_DEFINE_ERROR(BadLabel);
CORNERS_DEFINE_ERROR(BadFace);
CORNERS_DEFINE_ERROR(InvalidGerm);
CORNERS_DEFINE_ERROR(NotSubmersion);
CORNERS_DEFINE_ERROR(NotJoyceSmooth);
CORNERS_DEFINE_ERROR(NotTransverse);
CORNERS_DEFINE_ERROR(NoMediator);
CORNERS_DEFINE_ERROR(HypothesisNotMet);
CORNERS_DEFINE_ERROR(InvalidComplex);
CORNERS_DEFINE_ERROR(ParseError);

// Raised when a property that the construction guarantees fails to hold.
// Seeing one of these means there is a bug in this library.
CORNERS_DEFINE_ERROR(InternalInvariantViolation);

#undef CORNERS_DEFINE_ERROR

}  // namespace corners
