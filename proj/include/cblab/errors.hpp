#pragma once

#include <stdexcept>
#include <string>

namespace cblab {

// Root of every error the library raises. `kind()` is a stable identifier
// used by the command-line front end to report the error class.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "Error"; }
};

#define CBLAB_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                        \
   public:                                                           \
    using Error::Error;                                              \
    const char* kind() const noexcept override { return #Name; }     \
  }

CBLAB_DEFINE_ERROR(DomainError);
CBLAB_DEFINE_ERROR(PoleError);
CBLAB_DEFINE_ERROR(SingularSystemError);
CBLAB_DEFINE_ERROR(NoCriticalValues);
CBLAB_DEFINE_ERROR(RootFindingError);
CBLAB_DEFINE_ERROR(NotTransitiveError);
CBLAB_DEFINE_ERROR(NotTreeError);
CBLAB_DEFINE_ERROR(SizeLimitError);
CBLAB_DEFINE_ERROR(DenominatorNearZero);
CBLAB_DEFINE_ERROR(ParseError);

#undef CBLAB_DEFINE_ERROR

// Series truncation did not reach the requested tolerance. `degraded()` is
// set when the parameter was below the full-accuracy floor.
class PrecisionError : public Error {
 public:
  PrecisionError(const std::string& what, bool degraded)
      : Error(what), degraded_(degraded) {}
  const char* kind() const noexcept override { return "PrecisionError"; }
  bool degraded() const noexcept { return degraded_; }

 private:
  bool degraded_;
};

}  // namespace cblab
