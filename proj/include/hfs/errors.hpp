#pragma once

#include <stdexcept>
#include <string>

namespace hfs {

// Base class for all domain errors thrown by this library.
struct HfsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UniverseMismatch : HfsError {
  UniverseMismatch() : HfsError("operands are defined over different universes") {}
};

struct ObjectNotInUniverse : HfsError {
  explicit ObjectNotInUniverse(const std::string& object)
      : HfsError("object not in universe: " + object), object(object) {}
  std::string object;
};

struct EmptyFamily : HfsError {
  EmptyFamily() : HfsError("fold over an empty family has no meaning here") {}
};

struct EmptyParameterIntersection : HfsError {
  EmptyParameterIntersection()
      : HfsError("restricted operation: the parameter sets do not overlap") {}
};

// Raised when a soft set fails the beta-covering condition.  Carries the
// first object (in universe order) at which the condition fails.
struct NotABetaCovering : HfsError {
  explicit NotABetaCovering(const std::string& object)
      : HfsError("not a beta-covering: condition fails at object " + object),
        object(object) {}
  std::string object;
};

// Raised when an approximation is queried on a space where some object has
// no qualifying parameter (its neighborhood is Null).
struct UndefinedNeighborhood : HfsError {
  explicit UndefinedNeighborhood(const std::string& object)
      : HfsError("neighborhood of " + object + " is undefined (Null)"),
        object(object) {}
  std::string object;
};

struct ParseError : HfsError {
  using HfsError::HfsError;
};

}  // namespace hfs
