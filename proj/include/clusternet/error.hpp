#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clusternet {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(actual)) {}
};

/// Raised instead of letting an exponent or weighted degree wrap around.
class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated by the caller (a programming bug).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

class NoPositiveGrading : public Error {
 public:
  using Error::Error;
};

/// An enumeration hit its configured bound. `count()` is how far it got.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t count)
      : Error(what + " exceeded cap after " + std::to_string(count) +
              " items"),
        count_(count) {}

  std::size_t count() const noexcept { return count_; }

 private:
  std::size_t count_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownSpecies : public ParseError {
 public:
  UnknownSpecies(const std::string& name, std::size_t offset)
      : ParseError("unknown species '" + name + "'", offset), name_(name) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class SyntaxError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace clusternet

namespace clusternet {

class NodeCapExceeded : public CapExceeded {
 public:
  explicit NodeCapExceeded(std::size_t count)
      : CapExceeded("cluster graph nodes", count) {}
};

class ArcCapExceeded : public CapExceeded {
 public:
  explicit ArcCapExceeded(std::size_t count)
      : CapExceeded("cluster graph arcs", count) {}
};

}  // namespace clusternet
