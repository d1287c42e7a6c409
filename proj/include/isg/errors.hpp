#ifndef ISG_ERRORS_HPP_
#define ISG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace isg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural problems with an input multiplication table (non-square,
// out-of-range entry).
struct MalformedTable : Error {
  using Error::Error;
};

// An enumeration or materialization cap was exceeded.
struct TooLarge : Error {
  using Error::Error;
};

// A semilattice input lacks a binary meet.
struct MeetMissing : Error {
  using Error::Error;
};

// An argument is outside the mathematical domain of the operation.
struct DomainError : Error {
  using Error::Error;
};

struct NotComposable : Error {
  using Error::Error;
};

// Patch set T is not contained in the down-set of s.
struct BadPatchSet : Error {
  using Error::Error;
};

// Base set A is not contained in the required E-filter set.
struct BadBase : Error {
  using Error::Error;
};

struct NotIdempotentFilter : Error {
  using Error::Error;
};

struct NotProper : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, int line) : Error(what), line(line) {}
  int line;
};

// The input table has no absorbing element.
struct MissingZero : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace isg

#endif  // ISG_ERRORS_HPP_
