#pragma once

#include <stdexcept>
#include <string>

namespace islide {

// Base of every exception thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid family or combinator parameters (e.g. theta with two length-1 paths).
struct ParameterError : Error {
  using Error::Error;
};

// Malformed graph6 / edge list / DOT / JSON input.
struct FormatError : Error {
  using Error::Error;
};

// A precondition on an operation argument does not hold.
struct ArgumentError : Error {
  using Error::Error;
};

struct EmptyGraphError : ArgumentError {
  EmptyGraphError() : ArgumentError("graph has no vertices") {}
};

// A construction produced a seed whose i-graph does not match its target.
struct CertificationError : Error {
  using Error::Error;
};

}  // namespace islide
