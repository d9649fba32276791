#pragma once

#include <stdexcept>
#include <string>

namespace dicol {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Digraph construction violations. All of them reject the mutation: the
// whole toolkit assumes simple, digon-free digraphs.
struct SelfLoopError : Error {
  using Error::Error;
};
struct DigonError : Error {
  using Error::Error;
};
struct DuplicateArcError : Error {
  using Error::Error;
};
struct VertexOutOfRangeError : Error {
  using Error::Error;
};

struct NotIndependentError : Error {
  using Error::Error;
};
struct NoArcsError : Error {
  using Error::Error;
};

struct ColouringDomainMismatchError : Error {
  using Error::Error;
};
struct OracleInfeasibleError : Error {
  using Error::Error;
};

struct CapExceededError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace dicol
