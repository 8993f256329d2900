#pragma once

#include <stdexcept>
#include <string>

namespace icosian {

// Base class for every error raised by the library. Each subclass maps to one
// failure condition of the public operations.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define ICOSIAN_DEFINE_ERROR(Name)                                             \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string &what) : Error(#Name ": " + what) {}       \
  }

ICOSIAN_DEFINE_ERROR(DivisionByZero);
ICOSIAN_DEFINE_ERROR(NotInGoldenSubfield);
ICOSIAN_DEFINE_ERROR(CapExceeded);
ICOSIAN_DEFINE_ERROR(BadParameter);
ICOSIAN_DEFINE_ERROR(NotInvariant);
ICOSIAN_DEFINE_ERROR(SearchFailed);
ICOSIAN_DEFINE_ERROR(CertificationFailed);
ICOSIAN_DEFINE_ERROR(DegenerateInput);
ICOSIAN_DEFINE_ERROR(CoplanarityFailed);
ICOSIAN_DEFINE_ERROR(InvalidSelector);
ICOSIAN_DEFINE_ERROR(ParseError);

#undef ICOSIAN_DEFINE_ERROR

} // namespace icosian
