#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bingtau {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A twist parameter fell outside the representable range [-2^31, 2^31).
class TwistRangeError : public Error {
 public:
  using Error::Error;
};

// Malformed expression or tree text. `position` is a 0-based byte offset
// into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// A base knot name did not resolve in the database.
class UnknownKnotError : public Error {
 public:
  explicit UnknownKnotError(const std::string& knot)
      : Error("unknown knot: " + knot), name(knot) {}
  std::string name;
};

// A database record exists but lacks the invariant needed by the caller.
class MissingInvariantError : public Error {
 public:
  MissingInvariantError(const std::string& knot, const std::string& field)
      : Error("knot " + knot + " has no recorded " + field),
        name(knot),
        field(field) {}
  std::string name;
  std::string field;
};

// Bad database file contents or a record that violates its invariants.
class DatabaseError : public Error {
 public:
  using Error::Error;
};

// Misuse of a tree operation (collapsing a leaf, bad node id, ...).
class TreeError : public Error {
 public:
  using Error::Error;
};

// The requested computation falls outside the implemented calculus.
class UnsupportedCaseError : public Error {
 public:
  using Error::Error;
};

// Both trees of a Hopf pipeline are single leaves: the covering-link
// construction needs at least one chain of length >= 2.
class BothTreesTrivialError : public UnsupportedCaseError {
 public:
  BothTreesTrivialError()
      : UnsupportedCaseError(
            "both trees are single leaves; the Hopf covering-link "
            "construction needs at least one tree with >= 2 leaves") {}
};

// A certificate's recorded steps did not reproduce its stated result.
class ReplayError : public Error {
 public:
  using Error::Error;
};

}  // namespace bingtau
