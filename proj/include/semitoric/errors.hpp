#pragma once

#include <stdexcept>
#include <string>

namespace semitoric {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct DependentRays : Error {
  using Error::Error;
};
struct NotAFace : Error {
  using Error::Error;
};
struct NotInCone : Error {
  using Error::Error;
};
struct NotAFan : Error {
  using Error::Error;
};
struct ConeNotInFan : Error {
  using Error::Error;
};
/// Generator extraction produced a monoid whose membership disagrees with
/// its defining oracle on the certification box. Always fatal.
struct CertificationFailure : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct SchemaError : Error {
  std::string pointer;  // JSON pointer to the offending element
  SchemaError(const std::string& what, std::string ptr) : Error(what), pointer(std::move(ptr)) {}
};
struct UnsupportedRank : Error {
  using Error::Error;
};
/// Structurally well-formed input that fails a mathematical precondition
/// (fan axioms, validation reports, ...).
struct InvalidInput : Error {
  using Error::Error;
};

}  // namespace semitoric
