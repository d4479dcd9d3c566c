#pragma once

#include <stdexcept>
#include <string>

namespace numrad {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
  using Error::Error;
};
struct NumericalFailure : Error {
  using Error::Error;
};
struct IndefiniteInput : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct SingularWeight : Error {
  using Error::Error;
};
struct NegativeWeight : Error {
  using Error::Error;
};
struct NegativeEntry : Error {
  using Error::Error;
};
struct UnknownSuite : Error {
  using Error::Error;
};
struct ConstructionFailure : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace numrad
