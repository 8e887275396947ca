#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace traag {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph or word text. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(line == 0 ? reason : "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

/// An input violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public PreconditionError {
 public:
  explicit UnknownVertex(const std::string& name)
      : PreconditionError("unknown vertex '" + name + "'") {}
};

class UnknownGenerator : public PreconditionError {
 public:
  explicit UnknownGenerator(const std::string& name)
      : PreconditionError("unknown generator '" + name + "'") {}
};

class UnknownEdge : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class DuplicateVertex : public PreconditionError {
 public:
  explicit DuplicateVertex(const std::string& name)
      : PreconditionError("duplicate vertex '" + name + "'") {}
};

class MissingKind : public PreconditionError {
 public:
  explicit MissingKind(const std::string& name)
      : PreconditionError("no cone edge kind given for vertex '" + name + "'") {}
};

class NotUniversal : public PreconditionError {
 public:
  explicit NotUniversal(const std::string& name)
      : PreconditionError("vertex '" + name + "' is not adjacent to every other vertex") {}
};

class ApexShape : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotInSubgroup : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A bounded computation would exceed its configured size.
class SizeLimit : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Two algorithms that must agree did not. Always a bug.
class InternalDisagreement : public Error {
 public:
  using Error::Error;
};

}  // namespace traag
