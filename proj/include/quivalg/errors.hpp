#pragma once

#include <stdexcept>
#include <string>

namespace quivalg {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Composing two paths whose endpoints do not meet.
class EndpointMismatchError : public Error {
 public:
  using Error::Error;
};

// A proposed relation is not usable (too short, unknown arrow, ...).
class RelationError : public Error {
 public:
  using Error::Error;
};

// The algebra is not admissible (some cycle survives the relations),
// so path catalogs and everything built on them do not exist.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

// An analysis was invoked on an algebra that does not satisfy its
// hypotheses (disconnected quiver, not special multiserial, ...).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

// An internal consistency audit failed.  Seeing this means a bug.
class AuditError : public Error {
 public:
  using Error::Error;
};

// Random generation exhausted its attempt budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// Input text could not be parsed.  Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace quivalg
