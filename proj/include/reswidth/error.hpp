#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reswidth {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed DIMACS or rtrace input. line() is 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A clause or term containing both x and ~x.
class TrivialFormula : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured limit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// An inequality checker was called on inputs violating its hypothesis.
class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

// Trace step `index` (0-based position in the step list) is not a legal rule application.
class IllegalStep : public Error {
 public:
  IllegalStep(std::size_t index, const std::string& reason)
      : Error("step " + std::to_string(index + 1) + ": " + reason), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

// Trace step `index` references an id that was never defined or is already erased.
class DeadReference : public IllegalStep {
 public:
  DeadReference(std::size_t index, std::size_t id)
      : IllegalStep(index, "reference to dead or unknown id " + std::to_string(id)), id_(id) {}
  std::size_t id() const noexcept { return id_; }

 private:
  std::size_t id_;
};

class NotARefutation : public Error {
 public:
  NotARefutation() : Error("trace does not derive the empty formula") {}
};

}  // namespace reswidth
