#pragma once

#include <stdexcept>
#include <string>

namespace dgal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed expression, variable name or input file.
struct ParseError : Error {
  using Error::Error;
};

struct DenominatorVanishes : Error {
  using Error::Error;
};

struct OrderOverflow : Error {
  using Error::Error;
};

struct SingularJacobian : Error {
  using Error::Error;
};

struct NotAGroup : Error {
  NotAGroup(const std::string& what, int left, int right)
      : Error(what), left_index(left), right_index(right) {}
  int left_index;
  int right_index;
};

struct NotExpressible : Error {
  using Error::Error;
};

struct UnknownScenario : Error {
  using Error::Error;
};

}  // namespace dgal
