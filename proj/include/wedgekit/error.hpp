#pragma once

#include <stdexcept>
#include <string>

namespace wedgekit {

// Precondition violation: bad shapes, out-of-range indices, mixed modes.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A count or allocation would exceed the configured or representable range.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Linear system with det(A) = 0 (exact) or a pivot below the float
// singularity threshold. `evidence()` states which.
class SingularSystemError : public std::runtime_error {
 public:
  SingularSystemError(const std::string& what, std::string evidence)
      : std::runtime_error(what), evidence_(std::move(evidence)) {}
  const std::string& evidence() const { return evidence_; }

 private:
  std::string evidence_;
};

// Malformed input text; positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// An identity that must hold by construction failed; indicates a bug in this
// library, never a user error.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wedgekit
