#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zonecover {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

/// A cap-merge condition |w| >= sin(alpha) or |w - w_i| <= sin(alpha - alpha_i)
/// failed beyond tolerance. `index` is the offending cap, or -1 for the norm
/// condition.
struct ConditionsViolated : Error {
  ConditionsViolated(const std::string& what, long index)
      : Error(what), index(index) {}
  long index;
};

struct RadiusBudgetExceeded : Error {
  using Error::Error;
};

struct ZeroVector : Error {
  using Error::Error;
};

struct CoplanarInputs : Error {
  using Error::Error;
};

struct PreconditionMismatch : Error {
  using Error::Error;
};

struct WidthBudgetExceeded : Error {
  using Error::Error;
};

struct SubsetBoundExceeded : Error {
  using Error::Error;
};

struct NumericalStall : Error {
  using Error::Error;
};

struct WidthSumNotPi : Error {
  using Error::Error;
};

struct RadiusBudgetTooSmall : Error {
  using Error::Error;
};

struct RadiusBudgetTooLarge : Error {
  using Error::Error;
};

struct WidthBudgetNotBelow2r : Error {
  using Error::Error;
};

struct WrongDimension : Error {
  using Error::Error;
};

/// An operation's advertised guarantee failed to hold numerically.
struct PostconditionFailed : Error {
  using Error::Error;
};

}  // namespace zonecover
