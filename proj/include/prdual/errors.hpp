#pragma once

#include <stdexcept>
#include <string>

namespace prdual {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define PRDUAL_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
  public:                                  \
    using Error::Error;                    \
  }

PRDUAL_DEFINE_ERROR(DimensionError);
PRDUAL_DEFINE_ERROR(ParseError);
PRDUAL_DEFINE_ERROR(IndependenceError);     // rows expected independent are not
PRDUAL_DEFINE_ERROR(IndependentRowsError);  // rows expected dependent are not
PRDUAL_DEFINE_ERROR(DependencyError);
PRDUAL_DEFINE_ERROR(SingularError);
PRDUAL_DEFINE_ERROR(ShiftError);
PRDUAL_DEFINE_ERROR(BadCertificate);
PRDUAL_DEFINE_ERROR(ScaleError);
PRDUAL_DEFINE_ERROR(KernelError);
PRDUAL_DEFINE_ERROR(ZeroPattern);
PRDUAL_DEFINE_ERROR(SizeError);
PRDUAL_DEFINE_ERROR(SpecError);

#undef PRDUAL_DEFINE_ERROR

}  // namespace prdual
