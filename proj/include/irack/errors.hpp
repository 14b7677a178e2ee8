#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irack {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A raw table whose shape or entries are unusable (wrong dimensions, index out of range).
class MalformedTable : public Error {
 public:
  using Error::Error;
};

/// A table that is well-formed but violates one of the defining laws.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

class NotAGroup : public Error {
 public:
  using Error::Error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

/// A relation would exceed the materialization cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Text-input error carrying the source name and 1-based line number (0 when unknown).
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        source_(std::move(source)),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace irack
